//! Engine for Ziggu puzzles and the classic Gray-code puzzles.
//!
//! States are base-4 strings ([`QuatString`]). The crate builds the four
//! listings (binary and quaternary reflected Gray codes, the longest and the
//! shortest Ziggu solutions), their change sequences, successor rules and
//! rankings, loopless generators, the Nurikabe bijection, and a brute-force
//! state-graph oracle to check all of it against.

pub mod codes;
pub mod error;
pub mod loopless;
pub mod nurikabe;
pub mod oracle;
pub mod rank;
pub mod rulers;
pub mod state;
pub mod stepper;

pub use codes::{count, listing, listing_iter, ListingKind, SolutionList};
pub use error::{MoveViolation, Result, ZigguError};
pub use rank::{rank, unrank};
pub use rulers::{ruler, ChangeEntry, RulerKind};
pub use state::{apply_move, legal_moves, Move, QuatString};
pub use stepper::{compare, next, prev, Side, SolveMode, StepOutcome};
