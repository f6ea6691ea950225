//! Textual interfaces: the polynomial expression grammar, the system file
//! format and report serialization.
//!
//! Expressions are written over variables `s1..sN` with `+ - *`, caret
//! powers with possibly negative integer exponents (`s1^-2` or `s1^(-2)`),
//! integer and rational literals (`3`, `-4/7`) and parentheses. A system
//! file starts with a header line `n k l`, followed by `l` rows of `k`
//! expressions separated by `;`. `#` starts a comment; blank lines are
//! ignored.

mod parse;
mod report;

pub use parse::{parse_poly, parse_system, ParseError};
pub use report::{format_system, report_value, write_report, Report, ReportFormat};
