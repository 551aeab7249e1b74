use std::env;

/// Size gates for the enumerative routines.
///
/// The node gate can be overridden through the `MVC_MAX_NODES` environment
/// variable; the remaining gates have fixed defaults but may be adjusted by
/// callers that construct a `Limits` directly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of crystal elements generated by any closure routine.
    pub max_nodes: usize,
    /// Maximum order of a Weyl group that will be enumerated element-wise.
    pub max_group_order: u128,
    /// Maximum Weyl group order for which every reduced word of the longest
    /// element is enumerated.
    pub max_rw0_group_order: u128,
    /// Maximum number of reduced words of the longest element that will be
    /// materialised (counted exactly before enumeration).
    pub max_reduced_words: u128,
    /// Maximum word length for exhaustive subsequence enumeration.
    pub max_subword_len: usize,
}

pub const DEFAULT_MAX_NODES: usize = 100_000;

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_nodes: DEFAULT_MAX_NODES,
            max_group_order: 51_840,
            max_rw0_group_order: 1_152,
            max_reduced_words: 100_000,
            max_subword_len: 16,
        }
    }
}

impl Limits {
    /// Defaults, with `max_nodes` taken from `MVC_MAX_NODES` when it parses.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(n) = env::var("MVC_MAX_NODES")
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
        {
            limits.max_nodes = n;
        }
        limits
    }

    pub fn with_max_nodes(mut self, max_nodes: usize) -> Self {
        self.max_nodes = max_nodes;
        self
    }
}
