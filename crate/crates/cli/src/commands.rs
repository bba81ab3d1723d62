//! One function per subcommand. Each returns the text to print on success.

use std::fmt::{self, Write as _};

use diagrect::bijection::{baxter_of, fiber, rightmost_of, twisted_baxter_of};
use diagrect::flipgraph::{
    build, metrics, verify_characterization, verify_counts, verify_inversion, verify_theorem_lr, verify_theorem_main,
    FlipGraph, Report,
};
use diagrect::flips::{classify_all, flip as flip_rect, flip_edge};
use diagrect::permutation::enumerate_avoiders;
use diagrect::rectangulation::rho;
use diagrect::{ClassName, EdgeId, Error, PatternClass, Permutation};

use crate::{export, svg, text};

/// Largest size accepted by the exhaustive commands.
pub const MAX_N: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub const VERIFY_FAILED: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const NOT_CANONICAL: u8 = 3;
    pub const UNFLIPPABLE: u8 = 4;

    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: Self::USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotCanonical(_) | Error::NotDiagonal(_) => Self::NOT_CANONICAL,
            Error::Unflippable { .. } => Self::UNFLIPPABLE,
            _ => Self::USAGE,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

pub type CliResult = Result<String, CliError>;

type Check = fn(&FlipGraph) -> Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theorem {
    Main,
    Lr,
    Char,
    Counts,
    Inversion,
    All,
}

fn check_size(n: usize) -> Result<(), CliError> {
    if n == 0 || n > MAX_N {
        return Err(CliError::usage(format!("n must lie in 1..={MAX_N}, got {n}")));
    }
    Ok(())
}

fn parse_perm(s: &str) -> Result<Permutation, CliError> {
    Ok(s.trim().parse()?)
}

pub fn map(perm: &str) -> CliResult {
    Ok(text::write_rect(&rho(&parse_perm(perm)?)))
}

pub fn perms(input: &str) -> CliResult {
    let g = text::parse_rect(input)?;
    let size = match fiber(&g) {
        Ok(f) => f.len().to_string(),
        Err(Error::TooLarge { .. }) => "n/a".to_string(),
        Err(e) => return Err(e.into()),
    };
    Ok(format!(
        "baxter {}\ntwisted {}\nrightmost {}\nfiber {}\n",
        baxter_of(&g),
        twisted_baxter_of(&g),
        rightmost_of(&g),
        size
    ))
}

/// One line per interior edge: id, class, and the Baxter key after flipping.
pub fn flips(input: &str) -> CliResult {
    let g = text::parse_rect(input)?;
    let mut out = String::new();
    for (e, class) in classify_all(&g) {
        let key = match flip_edge(&g, &e) {
            Ok(o) => baxter_of(&o.rect).to_string(),
            Err(_) => "-".to_string(),
        };
        writeln!(out, "{}\t{}\t{}", e.id, class, key).unwrap();
    }
    Ok(out)
}

pub fn flip(input: &str, edge: &str) -> CliResult {
    let g = text::parse_rect(input)?;
    let id: EdgeId = edge.parse()?;
    let out = flip_rect(&g, id)?;
    Ok(text::write_rect(&out.rect))
}

pub fn graph(n: usize, format: GraphFormat) -> CliResult {
    check_size(n)?;
    let fg = build(n);
    Ok(match format {
        GraphFormat::Dot => export::to_dot(&fg),
        GraphFormat::Json => export::to_json(&fg),
    })
}

fn report_text(r: &Report) -> String {
    let mut out = format!(
        "{} n={}: {} ({} compared)\n",
        r.name,
        r.n,
        if r.passed() { "pass" } else { "FAIL" },
        r.compared
    );
    for f in &r.failures {
        writeln!(out, "  {f}").unwrap();
    }
    out
}

/// Runs the selected checks. A failing check yields exit code 1 with the
/// full report, counterexamples included.
pub fn verify(n: usize, theorem: Theorem) -> CliResult {
    check_size(n)?;
    let mut reports = Vec::new();
    if theorem == Theorem::Inversion || theorem == Theorem::All {
        reports.push(verify_inversion(n));
    }
    if theorem != Theorem::Inversion {
        let fg = build(n);
        let checks: [(Theorem, Check); 4] = [
            (Theorem::Main, verify_theorem_main),
            (Theorem::Lr, verify_theorem_lr),
            (Theorem::Char, verify_characterization),
            (Theorem::Counts, verify_counts),
        ];
        for (t, check) in checks {
            if theorem == t || theorem == Theorem::All {
                reports.push(check(&fg));
            }
        }
        if theorem == Theorem::All {
            let m = metrics(&fg);
            let diameter = m.diameter.map_or("-".to_string(), |d| d.to_string());
            reports.push(Report {
                name: "connected",
                n,
                compared: m.nodes,
                failures: if m.connected {
                    Vec::new()
                } else {
                    vec![format!("flip graph is disconnected (diameter {diameter})")]
                },
            });
        }
    }
    let out: String = reports.iter().map(report_text).collect();
    if reports.iter().all(Report::passed) {
        Ok(out)
    } else {
        Err(CliError {
            code: CliError::VERIFY_FAILED,
            message: out,
        })
    }
}

pub fn render(input: &str) -> CliResult {
    let g = text::parse_rect(input)?;
    Ok(svg::render(&g, &svg::RenderStyle::default()))
}

pub fn enumerate(n: usize, class: &str) -> CliResult {
    check_size(n)?;
    let name: ClassName = class.parse()?;
    let mut out = String::new();
    for p in enumerate_avoiders(n, &PatternClass::new(name)) {
        writeln!(out, "{p}").unwrap();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_small() {
        assert_eq!(map("1").unwrap(), "1\n1\n");
        assert_eq!(map("12").unwrap(), "2\n1 2\n1 2\n");
        assert_eq!(map("21").unwrap(), "2\n1 1\n2 2\n");
        assert_eq!(map("13").unwrap_err().code, CliError::USAGE);
    }

    #[test]
    fn perms_of_vertical_cut() {
        assert_eq!(
            perms("2\n1 2\n1 2\n").unwrap(),
            "baxter 12\ntwisted 12\nrightmost 12\nfiber 1\n"
        );
    }

    #[test]
    fn flips_of_vertical_cut() {
        assert_eq!(flips("2\n1 2\n1 2\n").unwrap(), "1|2:v\tsimple\t21\n");
        assert_eq!(flip("2\n1 2\n1 2\n", "1|2:v").unwrap(), "2\n1 1\n2 2\n");
        assert_eq!(flip("2\n1 2\n1 2\n", "1|2:h").unwrap_err().code, CliError::USAGE);
    }

    #[test]
    fn size_limits() {
        assert_eq!(graph(0, GraphFormat::Json).unwrap_err().code, CliError::USAGE);
        assert_eq!(verify(9, Theorem::Main).unwrap_err().code, CliError::USAGE);
        assert_eq!(enumerate(3, "nope").unwrap_err().code, CliError::USAGE);
    }
}
