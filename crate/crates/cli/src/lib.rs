//! Verification suites, descent-condition queries and fixed-point
//! localization reports for the `spindex` command.

pub mod localize;
pub mod report;
pub mod suites;
pub mod twist_cmd;

pub use localize::{localize, parse_input, render_input, InputError};
pub use report::{Check, Report, Status, Summary};
pub use suites::{run_suite, Suite, VerifyOptions};
pub use twist_cmd::{check_twist, Kind, Mode, TwistQuery};
