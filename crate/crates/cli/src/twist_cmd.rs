use clap::ValueEnum;
use serde_json::json;

use spindex_core::twist::{closed_form_condition, oracle_condition, PowerProfile, TwistKind};
use spindex_core::Error;

use crate::report::{Check, Report, Status};
use crate::suites::structure_from;

const ANCHOR: &str = "descent conditions on twisting powers";

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Mode {
    Closed,
    Oracle,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Kind {
    Exterior,
    Symmetric,
}

#[derive(Clone, Debug)]
pub struct TwistQuery {
    pub r: u32,
    pub m: Option<u32>,
    pub m2: Option<u32>,
    pub u: u32,
    pub u2: u32,
    pub s: u32,
    pub t: u32,
    pub kind: Kind,
    pub mode: Mode,
}

fn admissible(b: bool) -> &'static str {
    if b {
        "admissible"
    } else {
        "not admissible"
    }
}

fn verdict_check(name: &str, result: Result<bool, Error>) -> (Check, Option<bool>) {
    match result {
        Ok(b) => (Check::new(name, ANCHOR, Status::Pass, json!({"verdict": admissible(b)})), Some(b)),
        Err(e @ Error::UncoveredCase(_)) => (Check::skip(name, ANCHOR, format!("uncovered case: {e}")), None),
        Err(e @ Error::GuardExceeded { .. }) => (Check::skip(name, ANCHOR, e.to_string()), None),
        Err(e) => (Check::new(name, ANCHOR, Status::Fail, json!({"error": e.to_string()})), None),
    }
}

/// Evaluates the descent condition for one structure and power profile,
/// returning the report and a one-line verdict. Invalid structures or
/// profiles are returned as errors.
pub fn check_twist(q: &TwistQuery) -> Result<(Report, String), Error> {
    let structure = structure_from(q.r, q.m, q.m2)?;
    let kind = match q.kind {
        Kind::Exterior => TwistKind::Exterior,
        Kind::Symmetric => TwistKind::Symmetric,
    };
    let prof = PowerProfile::simple(&structure, kind, q.u, q.u2, q.s, q.t)?;
    let mut report = Report::default();
    let mut closed = None;
    let mut oracle = None;
    if q.mode != Mode::Oracle {
        let (c, v) = verdict_check("closed-form condition", closed_form_condition(&structure, &prof));
        report.push(c);
        closed = v;
    }
    if q.mode != Mode::Closed {
        let (c, v) = verdict_check("weight oracle", oracle_condition(&structure, &prof));
        report.push(c);
        oracle = v;
    }
    if q.mode == Mode::Both {
        report.push(match (closed, oracle) {
            (Some(a), Some(b)) => Check::verdict("agreement", ANCHOR, a == b, json!({"closed": a, "oracle": b})),
            _ => Check::skip("agreement", ANCHOR, "one side has no verdict"),
        });
    }
    let verdict = match (closed, oracle) {
        (Some(a), Some(b)) if a != b => "disagreement between closed form and oracle".to_string(),
        (Some(a), _) | (None, Some(a)) => admissible(a).to_string(),
        (None, None) => "no verdict".to_string(),
    };
    Ok((report, format!("{structure}: {verdict}")))
}
