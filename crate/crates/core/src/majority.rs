use crate::ordering::Alternative;
use crate::profile::Profile;

/// Pairwise support counts: `support(x, y)` is the number of individuals
/// ranking `x` above `y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MajorityMatrix {
    m: usize,
    n: usize,
    support: Vec<u32>,
}

impl MajorityMatrix {
    pub fn new(u: &Profile) -> Self {
        let m = u.m();
        let mut support = vec![0u32; m * m];
        for o in u.orderings() {
            let r = o.ranks();
            for (i, &x) in r.iter().enumerate() {
                let row = x * m;
                for &y in &r[i + 1..] {
                    support[row + y] += 1;
                }
            }
        }
        MajorityMatrix {
            m,
            n: u.n(),
            support,
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn support(&self, x: Alternative, y: Alternative) -> u32 {
        self.support[x * self.m + y]
    }

    pub fn margin(&self, x: Alternative, y: Alternative) -> i64 {
        self.support(x, y) as i64 - self.support(y, x) as i64
    }

    /// Weak majority relation: at least as many prefer `x` to `y` as the reverse.
    pub fn weakly_beats(&self, x: Alternative, y: Alternative) -> bool {
        self.margin(x, y) >= 0
    }

    pub fn beats(&self, x: Alternative, y: Alternative) -> bool {
        self.margin(x, y) > 0
    }

    pub fn margins(&self) -> Vec<Vec<i64>> {
        (0..self.m)
            .map(|x| (0..self.m).map(|y| self.margin(x, y)).collect())
            .collect()
    }
}

pub fn majority_matrix(u: &Profile) -> MajorityMatrix {
    MajorityMatrix::new(u)
}
