//! Exact combinatorics of square-tiled surfaces and simple closed curves on them.
//!
//! ```
//! use origami_core::curve::core_curves;
//! use origami_core::{origami_edge_path, verify_edge_path, Origami, SurfaceComplex};
//!
//! # fn main() -> origami_core::Result<()> {
//! let o = Origami::from_images(vec![1, 2, 3, 0], vec![1, 3, 0, 2])?;
//! let c = SurfaceComplex::build(&o)?;
//! let (h, v) = core_curves(&c);
//! let p = origami_edge_path(&h[0], &v[0], &c)?;
//! assert!(verify_edge_path(&p.curves, &c)?.passed());
//! # Ok(())
//! # }
//! ```

pub mod bicorn;
pub mod complex;
pub mod curve;
pub mod error;
pub mod explorer;
pub mod io;
pub mod minimal;
pub mod origami;
pub mod overlay;
pub mod pair;
pub mod perm;
pub mod regions;
pub mod render;
pub mod twist;

pub use bicorn::{origami_edge_path, verify_edge_path, EdgePath};
pub use complex::SurfaceComplex;
pub use curve::{EdgePoint, PLCurve, Rat, Side};
pub use error::{Error, Result};
pub use minimal::{geometric_intersection, is_coherent, is_filling, reduce_to_minimal};
pub use origami::Origami;
pub use pair::origami_from_pair;
pub use perm::Permutation;
pub use twist::{apply_word, dehn_twist, iterate_pa, TwistWord};
