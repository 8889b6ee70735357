//! Brute-force ground truth for the range results.

mod claims;
mod enumerate;
mod gauge;
mod range;

pub use claims::{
    copeland_odd_sizes, profile_from_letters, property_claims, same_up_to_relabeling,
    same_up_to_relabeling_and_order, verify_claims, Claim, ClaimReport, COPELAND_TABLES,
    DEFAULT_M_MAX, DEFAULT_N_MAX, ENUMERATION_BUDGET, TOP_CYCLE_TABLE,
};
pub use enumerate::{
    binomial, enumerate_profiles, multichoose, Mode, ProfileIter, ProfileSpace, MAX_ENUMERATION_M,
    MAX_ENUMERATION_SIZE,
};
pub use gauge::{min_gauge, MAX_GAUGE_M, MAX_GAUGE_N};
pub use range::{achievable_sizes, range_report, RangeOptions, RangeReport, Witness};
