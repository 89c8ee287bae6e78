//! Total-order ranking for neutrosophic triplets.
//!
//! A neutrosophic triplet `(t, i, f)` grades one alternative by three
//! independent components in `[0, 1]`: truth, indeterminacy, and falsehood.
//! Because the components are independent, triplets have no native order;
//! this crate supplies one, built from three scalar quality functions
//! applied lexicographically:
//!
//! 1. score `(2 + t - i - f) / 3`, the primary key;
//! 2. accuracy `t - f`, breaking score ties;
//! 3. certainty `t`, breaking accuracy ties.
//!
//! For single-valued triplets the three keys pin down all three components,
//! so the cascade is a total order: see [`SvnTriplet::compare`]. The same
//! recipe extends to triplets graded by intervals ([`IvnTriplet`], compared
//! through component midpoints) and by finite unions of points and
//! intervals ([`SubsetTriplet`], ranked through its closed hull). Interval
//! comparison itself is covered by the possibility degree and midpoint
//! methods on [`UnitInterval`], which agree with each other and come with a
//! normalized Hamming distance.
//!
//! # Example
//!
//! ```
//! use neutrorank::{rank_svn, RankOrdering, Rational, SvnTriplet};
//!
//! let items = vec![
//!     ("cautious", SvnTriplet::<Rational>::from_decimals("0.6", "0.2", "0.3")?),
//!     ("bold", SvnTriplet::from_decimals("0.8", "0.4", "0.3")?),
//!     ("muddled", SvnTriplet::from_decimals("0.4", "0.6", "0.4")?),
//! ];
//! assert_eq!(items[1].1.compare(&items[0].1), RankOrdering::Greater);
//!
//! let ranked = rank_svn(items)?;
//! let order: Vec<_> = ranked.iter().map(|entry| entry.label).collect();
//! assert_eq!(order, ["bold", "cautious", "muddled"]);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```
//!
//! # Numeric backends
//!
//! Every function is generic over [`Scalar`]. Use [`Rational`] for exact
//! arithmetic (decimal input becomes exact fractions, and the order laws
//! hold with no tolerance) or `f64` where speed matters more than the last
//! bit. Ties are decided by raw comparison in the chosen backend; there is
//! deliberately no epsilon anywhere, since a fuzzy equality would not be
//! transitive.

pub mod error;
pub mod interval;
pub mod ivn;
pub mod ordering;
pub mod rank;
pub mod scalar;
pub mod svn;

pub use error::{DomainError, EmptyInput, NotDegenerate};
pub use interval::{compare_scalar_interval, UnitInterval};
pub use ivn::{rank_ivn, IvnTriplet, RealInterval, SubsetTriplet, UnitSubset};
pub use ordering::{RankOrdering, TieKind};
pub use rank::RankedEntry;
pub use scalar::{DecimalError, Rational, Scalar};
pub use svn::{rank_svn, ScoreKey, SvnTriplet};
