/// Ceilings that turn runaway computations into a clean
/// [`Error::ResourceLimit`](crate::Error::ResourceLimit).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of S-pairs processed by one Buchberger run.
    pub max_gb_pairs: usize,
    /// Maximum bit length of any integer coefficient during reduction.
    pub max_coeff_bits: u64,
    /// Maximum worklist pops in the characteristic-series loop.
    pub max_worklist_pops: usize,
    /// Maximum total degree of a pseudo-remainder during the
    /// characteristic-set iteration.
    pub max_prem_degree: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_gb_pairs: 200_000,
            max_coeff_bits: 200_000,
            max_worklist_pops: 10_000,
            max_prem_degree: 1_000,
        }
    }
}
