//! Grunsky coefficients of univalent functions and the coefficient bounds
//! they imply.
//!
//! * [`power_series`]: exact truncated power series, the square-root
//!   transform `f_2(z) = sqrt(f(z^2))` and the bivariate logarithm whose
//!   coefficients are the Grunsky coefficients;
//! * [`grunsky`]: Grunsky tables, the coefficient identities for `a_2..a_5`
//!   and the odd-index Grunsky inequality;
//! * [`functionals`]: `gamma_3`, `|a_4| - |a_3|`, `a_2 a_3 - a_4`, `H_2(2)` and
//!   `H_3(1)`, each from `a_n` and from Grunsky coefficients;
//! * [`bound_optimizer`]: maximization of the closed-form bounds over the
//!   feasible region, including certified interval enclosures;
//! * [`cli`]: the `grunsky` command-line front end.

pub mod bound_optimizer;
pub mod cli;
pub mod functionals;
pub mod grunsky;
pub mod interval;
pub mod power_series;
