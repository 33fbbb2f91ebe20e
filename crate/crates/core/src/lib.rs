pub mod canonical;
pub mod cli;
pub mod code;
pub mod diagram;
pub mod macros;
pub mod moves;
pub mod oracle;
pub mod random;
pub mod trace;
pub mod unknot;

pub use canonical::{canonical_key, CanonicalKey};
pub use code::{parse_gauss_code, print_gauss_code};
pub use diagram::{Entity, GaussCodeError, GaussDiagram, Label, Role, Sign};
pub use moves::{apply_move, enumerate_moves, invert, Family, Insertions, KindSet, MoveError, MoveInstance, MoveKind, MoveParams};
pub use macros::{expand, verify_macro_table, Direction, MacroError, MacroInstance, MacroKind, MacroReport};
pub use unknot::{unknot, verify_trace, Trace, TraceStep, VerifyError};
pub use trace::{read_trace, write_trace};
pub use oracle::{find_path, min_unknot_depth, reachable, BudgetExceeded, SearchBounds};
