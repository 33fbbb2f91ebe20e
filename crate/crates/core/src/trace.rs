//! Line-oriented trace files.
//!
//! ```text
//! #twisted-gauss-trace v1
//! initial<TAB><gauss code>
//! step<TAB><index><TAB><kind><TAB><site><TAB><params><TAB><pre key><TAB><post key><TAB><tag or ->
//! terminal<TAB><gauss code>
//! ```
//!
//! Keys are written as canonical codes, so the empty diagram's key is an
//! empty field.

use thiserror::Error;

use crate::canonical::CanonicalKey;
use crate::code::{parse_gauss_code, print_gauss_code};
use crate::moves::{MoveInstance, MoveKind, MoveParams};
use crate::unknot::{Trace, TraceStep};

pub const TRACE_HEADER: &str = "#twisted-gauss-trace v1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("trace line {line}: {reason}")]
pub struct TraceParseError {
    pub line: usize,
    pub reason: String,
}

pub fn write_trace(t: &Trace) -> String {
    let mut out = format!("{TRACE_HEADER}\ninitial\t{}\n", print_gauss_code(&t.initial));
    for (i, s) in t.steps.iter().enumerate() {
        out.push_str(&format!(
            "step\t{i}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            s.step.kind,
            s.step.site,
            s.step.params,
            s.pre_key,
            s.post_key,
            s.macro_tag.as_deref().unwrap_or("-")
        ));
    }
    out.push_str(&format!("terminal\t{}\n", print_gauss_code(&t.terminal)));
    out
}

/// Reads a trace. Keys are read as written; checking them is the job of
/// [`crate::unknot::verify_trace`].
pub fn read_trace(text: &str) -> Result<Trace, TraceParseError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let err = |line: usize, reason: String| TraceParseError { line, reason };
    match lines.next() {
        Some((_, TRACE_HEADER)) => {}
        Some((n, other)) => return Err(err(n, format!("expected header {TRACE_HEADER:?}, found {other:?}"))),
        None => return Err(err(1, "empty input".into())),
    }
    let mut initial = None;
    let mut terminal = None;
    let mut steps = Vec::new();
    for (n, line) in lines {
        if terminal.is_some() {
            if line.trim().is_empty() {
                continue;
            }
            return Err(err(n, "content after terminal line".into()));
        }
        let fields: Vec<&str> = line.split('\t').collect();
        let code = |s: &str| parse_gauss_code(s).map_err(|e| err(n, e.to_string()));
        match fields.as_slice() {
            ["initial", c] if initial.is_none() => initial = Some(code(c)?),
            ["terminal", c] if initial.is_some() => terminal = Some(code(c)?),
            ["step", idx, kind, site, params, pre, post, tag] if initial.is_some() => {
                if idx.parse::<usize>().ok() != Some(steps.len()) {
                    return Err(err(n, format!("step index {idx} out of order")));
                }
                let kind: MoveKind = kind.parse().map_err(|e| err(n, format!("{e}")))?;
                let site: usize = site.parse().map_err(|_| err(n, format!("bad site {site:?}")))?;
                let params = MoveParams::parse(kind, params).map_err(|e| err(n, e.to_string()))?;
                let key = |s: &str| CanonicalKey::from_canonical_code(s).map_err(|e| err(n, e.to_string()));
                steps.push(TraceStep {
                    step: MoveInstance::new(kind, site, params),
                    pre_key: key(pre)?,
                    post_key: key(post)?,
                    macro_tag: (*tag != "-").then(|| tag.to_string()),
                });
            }
            _ => return Err(err(n, format!("unrecognized line {line:?}"))),
        }
    }
    let initial = initial.ok_or_else(|| err(0, "missing initial line".into()))?;
    let terminal = terminal.ok_or_else(|| err(0, "missing terminal line".into()))?;
    Ok(Trace { initial, steps, terminal })
}
