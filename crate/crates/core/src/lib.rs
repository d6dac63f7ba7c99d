//! Exact algebra of quaternionic polynomials under the regular product, and a
//! constructive solver for `f_1*h_1 + ... + f_n*h_n = 1` when the `f_l` have no
//! common zeros.

pub mod arith;
pub mod corona;
pub mod cpoly;
pub mod error;
pub mod factor;
pub mod hpoly;
pub mod polysolve;
pub mod syzygy;

pub use arith::{GaussRat, Quat, Rat, SliceForm};
pub use corona::{solve_corona, verify, CoronaInstance, CoronaOutcome, CoronaSolution};
pub use cpoly::{bezout_multi, Bezout, CPoly};
pub use error::{Error, Result};
pub use hpoly::{HPoly, ReciprocalPair, Sphere, SphereZeros, SplitPair, ZeroSet};
pub use polysolve::{CertificateOutcome, FullRankCertificate, MinorSearch, PolyMatrix, SearchConfig};
pub use syzygy::{NaturalSyzygy, SyzygyPair};
