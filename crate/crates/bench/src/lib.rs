//! Shared fixtures for the kernel benchmarks.

use eigensign::families::{gen_petersen, t_m};
use eigensign::graph::Multigraph;

pub fn medium_tm() -> Multigraph {
    t_m(6).expect("valid parameter")
}

pub fn large_tm() -> Multigraph {
    t_m(8).expect("valid parameter")
}

pub fn medium_gp() -> Multigraph {
    gen_petersen(12, 5).expect("valid parameters")
}
