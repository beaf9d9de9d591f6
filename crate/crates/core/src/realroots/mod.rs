//! Real-root certification: Sturm counting, exact root isolation and
//! membership of all zeros in a region.

mod isolate;
mod root;
mod sturm;

pub use isolate::{all_simple, analyze, cauchy_bound, is_rz, root_bound, IntervalSpec, IsolatingInterval, RayDirection, RootReport, RzVerdict};
pub use root::{IsolatedRoot, RealRoot};
pub use sturm::{sturm_count, Bound, SturmChain};


