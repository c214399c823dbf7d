//! Exact solvers for binary-action coordination games with strategic
//! complementarities and irreversible commitment.
//!
//! Players choose between action 0 and action 1. A coalition is a
//! [`PlayerSet`] and doubles as an action profile: member players play 1.
//! Payoffs are exact rationals.
//!
//! The crate covers:
//! - stage-game analysis ([`game`]): assumption checks, Nash equilibria,
//!   iterated strict dominance, strictly sufficient sets;
//! - directed graphs ([`digraph`]): SCCs, reachability, directed tree-depth;
//! - synchronous commitment games ([`sync`]): the horizon operator `tau`,
//!   the least equilibrium operator `phi`, equilibrium outcome sets;
//! - weakest-link reductions ([`graphical`]);
//! - asynchronous move schedules ([`asynchronous`]): extensive-form
//!   elimination and optimal partition design;
//! - principal-side analyses ([`design`]) and ordered-game fast paths
//!   ([`ordered`]);
//! - a brute-force equilibrium enumerator for tiny instances ([`oracle`]).
//!
//! With the default `parallel` feature the data-parallel kernels run on
//! rayon; without it every kernel runs sequentially with identical results.

pub mod asynchronous;
pub mod catalog;
pub mod design;
pub mod digraph;
mod error;
mod exec;
pub mod game;
pub mod graphical;
pub mod oracle;
pub mod ordered;
pub mod random;
mod set;
pub mod sync;

pub use asynchronous::Partition;
pub use digraph::Digraph;
pub use error::{Error, Result};
pub use game::{Context, GameKind, Payoff, StageGame};
pub use set::PlayerSet;

/// Default cap on elementary evaluations for budgeted operations.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Default cap on the number of minimal sufficient graphs enumerated.
pub const DEFAULT_GRAPH_BUDGET: u64 = 1_000_000;
