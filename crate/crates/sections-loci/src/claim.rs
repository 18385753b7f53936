use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "NOT-APPLICABLE")]
    NotApplicable,
}

impl Status {
    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::NotApplicable => "NOT-APPLICABLE",
        }
    }
}

/// One predicted-vs-computed comparison; `anchor` is the statement it checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub name: String,
    pub anchor: String,
    pub status: Status,
    pub detail: String,
}

impl Claim {
    pub fn new(name: &str, anchor: &str, status: Status, detail: impl Into<String>) -> Claim {
        Claim { name: name.into(), anchor: anchor.into(), status, detail: detail.into() }
    }

    pub fn check(name: &str, anchor: &str, ok: bool, detail: impl Into<String>) -> Claim {
        Claim::new(name, anchor, Status::from_bool(ok), detail)
    }
}

pub fn any_failed(claims: &[Claim]) -> bool {
    claims.iter().any(|c| c.status == Status::Fail)
}
