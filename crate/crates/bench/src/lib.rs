//! Benchmark workloads for `powersum-core`, shared by the criterion targets.

use powersum_core::power_sums::{self, PowerSumKind};
use powersum_core::{faulhaber, triangles, CRoute, Family};

/// Every closed form for `S_{2k}` and `S_{2k-1}` at one point.
pub fn all_closed_forms(k: usize, n: u64) {
    power_sums::s_even_scaled(k, n).unwrap();
    power_sums::s_even_knuth(k, n).unwrap();
    power_sums::s_odd_knuth(k, n).unwrap();
    power_sums::s_odd_scaled_q(k, n).unwrap();
    power_sums::s_odd_scaled_f(k, n).unwrap();
    power_sums::s_via_bernoulli(2 * k, n).unwrap();
}

pub fn brute_even(k: usize, n: u64) {
    power_sums::brute(PowerSumKind::S, 2 * k, n).unwrap();
}

pub fn c_routes(k: usize) {
    for route in CRoute::ALL {
        faulhaber::faulhaber_c(k, route).unwrap();
    }
}

pub fn partitions_row(k: usize) {
    for m in 1..=k {
        triangles::r_via_partitions(k, m).unwrap();
    }
}

pub fn materialize(family: Family, rows: usize) -> usize {
    triangles::triangle_rows(family, rows).rows().len()
}
