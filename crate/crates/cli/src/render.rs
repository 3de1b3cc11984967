//! Human and record output.

use std::io::IsTerminal;

use nilflux::{AlphaPrime, VerificationReport};

use crate::reproduce::SuiteCheck;
use crate::run::status_ok;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Style {
    pub color: bool,
}

impl Style {
    pub const PLAIN: Style = Style { color: false };

    /// Colour only on a terminal, and never when `NILFLUX_COLOR=0`.
    pub fn from_env() -> Style {
        let disabled = std::env::var("NILFLUX_COLOR").is_ok_and(|v| v == "0");
        Style {
            color: !disabled && std::io::stdout().is_terminal(),
        }
    }

    fn paint(&self, good: bool, text: &str) -> String {
        if !self.color {
            return text.to_owned();
        }
        let code = if good { 32 } else { 31 };
        format!("\x1b[{code}m{text}\x1b[0m")
    }
}

fn alpha_suffix(r: &VerificationReport) -> String {
    match &r.alpha_prime {
        Some(a @ AlphaPrime::Value { .. }) => format!("  alpha'={a}"),
        _ => String::new(),
    }
}

fn details(r: &VerificationReport, out: &mut String) {
    if !r.passed() {
        out.push_str(&format!("\n    residual: {}", r.residual));
    }
    if let Some(note) = &r.note {
        out.push_str(&format!("\n    note: {note}"));
    }
}

pub fn human(r: &VerificationReport, style: Style) -> String {
    let status = r.status();
    let mut out = format!(
        "{} {}{}",
        style.paint(status_ok(status), &format!("{status:<13}")),
        r.name,
        alpha_suffix(r)
    );
    details(r, &mut out);
    out
}

pub fn human_suite(c: &SuiteCheck, style: Style) -> String {
    let status = c.report.status();
    let mark = if c.as_expected() { "ok " } else { "BAD" };
    let mut out = format!(
        "{} {status:<13} {}{}",
        style.paint(c.as_expected(), mark),
        c.report.name,
        alpha_suffix(&c.report)
    );
    if !c.as_expected() {
        out.push_str(&format!("  (expected {})", c.expected));
    }
    if status != "pass" || !c.as_expected() {
        details(&c.report, &mut out);
    }
    out
}

pub fn record_suite(c: &SuiteCheck) -> String {
    format!("{}\texpected={}", c.report.record(), c.expected)
}
