/// `⊕ R(a_i)`; the generator of `R(a)` sits in degree `-a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, serde::Serialize, serde::Deserialize)]
#[serde(transparent)]
pub struct GradedFreeModule {
    twists: Vec<i32>,
}

/// Degree of the generator of `R(twist)`. Every degree/twist conversion goes through here.
#[inline]
pub fn generator_degree(twist: i32) -> i32 {
    -twist
}

impl GradedFreeModule {
    pub fn new(twists: Vec<i32>) -> GradedFreeModule {
        GradedFreeModule { twists }
    }

    pub fn zero() -> GradedFreeModule {
        GradedFreeModule { twists: Vec::new() }
    }

    /// `R(a)^rank`.
    pub fn uniform(rank: usize, twist: i32) -> GradedFreeModule {
        GradedFreeModule { twists: vec![twist; rank] }
    }

    pub fn from_degrees(degrees: impl IntoIterator<Item = i32>) -> GradedFreeModule {
        GradedFreeModule { twists: degrees.into_iter().map(generator_degree).collect() }
    }

    pub fn twists(&self) -> &[i32] {
        &self.twists
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn is_zero(&self) -> bool {
        self.twists.is_empty()
    }

    pub fn degree(&self, i: usize) -> i32 {
        generator_degree(self.twists[i])
    }

    pub fn degrees(&self) -> Vec<i32> {
        self.twists.iter().map(|&a| generator_degree(a)).collect()
    }

    /// `M(a)`.
    pub fn twist(&self, a: i32) -> GradedFreeModule {
        GradedFreeModule { twists: self.twists.iter().map(|t| t + a).collect() }
    }

    pub fn dual(&self) -> GradedFreeModule {
        GradedFreeModule { twists: self.twists.iter().map(|t| -t).collect() }
    }

    pub fn direct_sum(&self, other: &GradedFreeModule) -> GradedFreeModule {
        let mut twists = self.twists.clone();
        twists.extend_from_slice(&other.twists);
        GradedFreeModule { twists }
    }

    /// Basis `e_i ⊗ f_j` at index `i * rank(other) + j`.
    pub fn tensor(&self, other: &GradedFreeModule) -> GradedFreeModule {
        let mut twists = Vec::with_capacity(self.rank() * other.rank());
        for a in &self.twists {
            for b in &other.twists {
                twists.push(a + b);
            }
        }
        GradedFreeModule { twists }
    }

    /// Generator degrees as a sorted multiset.
    pub fn sorted_degrees(&self) -> Vec<i32> {
        let mut d = self.degrees();
        d.sort_unstable();
        d
    }
}
