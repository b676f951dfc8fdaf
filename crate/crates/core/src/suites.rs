//! Named verification suites, as exposed on the command line.

use std::fmt;

use crate::algebras::{self, Builtin, Surface};
use crate::error::{Result, SkeinError};
use crate::frobenius;
use crate::gluing::{self, Scenario};
use crate::ncpoly::{diamond_check, validate_presentation, Presentation};
use crate::poisson::{self, Orientation};
use crate::report::Report;
use crate::scalar::Ring;

/// The suites of `verify`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Relations,
    Hopf,
    Confluence,
    Frobenius,
    Chebyshev,
    Trace,
    Poisson,
    Gluing,
    All,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Relations,
        Suite::Hopf,
        Suite::Confluence,
        Suite::Frobenius,
        Suite::Chebyshev,
        Suite::Trace,
        Suite::Poisson,
        Suite::Gluing,
        Suite::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::Hopf => "hopf",
            Suite::Confluence => "confluence",
            Suite::Frobenius => "frobenius",
            Suite::Chebyshev => "chebyshev",
            Suite::Trace => "trace",
            Suite::Poisson => "poisson",
            Suite::Gluing => "gluing",
            Suite::All => "all",
        }
    }

    pub fn parse(s: &str) -> Result<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| SkeinError::UnknownName(format!("suite `{s}`")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parameters shared by the suites; `None` selects each suite's defaults.
#[derive(Clone, Debug, Default)]
pub struct SuiteOptions {
    pub algebra: Option<Builtin>,
    pub ring: Option<Ring>,
    pub n: Option<u32>,
    pub surface: Option<Surface>,
    pub orientation: Option<Orientation>,
    pub scenario: Option<Scenario>,
    pub kernel_degree: Option<usize>,
    pub k: Option<usize>,
    /// Overlap length for completing presentations.
    pub max_len: Option<usize>,
}

/// Builtins with engine-level presentations (everything but the character varieties).
const ENGINE: [Builtin; 6] = [
    Builtin::QuantumPlane,
    Builtin::Bigon,
    Builtin::Gl2,
    Builtin::Triangle,
    Builtin::BigonPlus1,
    Builtin::TrianglePlus1,
];

impl SuiteOptions {
    fn n(&self) -> u32 {
        self.n.unwrap_or(3)
    }

    fn cyclo(&self) -> Result<Ring> {
        frobenius::check_order(self.n())
    }

    fn rings(&self) -> Vec<Ring> {
        match self.ring {
            Some(r) => vec![r],
            None => vec![Ring::Laurent, Ring::Cyclotomic(3)],
        }
    }

    fn algebras(&self, default: &[Builtin]) -> Vec<Builtin> {
        self.algebra.map_or_else(|| default.to_vec(), |b| vec![b])
    }

    fn surfaces(&self) -> Vec<Surface> {
        self.surface.map_or_else(|| vec![Surface::Bigon, Surface::Triangle], |s| vec![s])
    }
}

/// Overlap check for a presentation read from a file.
pub fn presentation_confluence(p: &Presentation, max_len: usize) -> Report {
    let mut r = Report::new(&format!("confluence {}", p.name()));
    let v = validate_presentation(p);
    r.record(format!("{}: rules well oriented", p.name()), "presentation", (!v.ok()).then(|| v.problems.join("; ")));
    r.attempt(format!("{}: overlaps resolve", p.name()), "diamond lemma", || {
        let limit = if p.is_completing() { Some(max_len) } else { None };
        let d = diamond_check(p, limit)?;
        Ok(d.failures.first().map(|(w, diff)| format!("{w}: {diff} ({} failures)", d.failures.len())))
    });
    r.finish()
}

/// Run one suite.
pub fn run_suite(suite: Suite, o: &SuiteOptions) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    match suite {
        Suite::Relations => {
            for ring in o.rings() {
                for b in o.algebras(&Builtin::ALL) {
                    out.push(algebras::relations_check(b, ring));
                }
            }
        }
        Suite::Hopf => {
            for ring in o.rings() {
                for b in o.algebras(&[Builtin::Bigon, Builtin::BigonPlus1, Builtin::Gl2]) {
                    out.push(algebras::hopf_check(b, ring));
                }
                out.push(algebras::det_q_check(ring));
                for t in [Builtin::Triangle, Builtin::TrianglePlus1] {
                    out.push(algebras::comodule_check(t, ring));
                    out.push(algebras::rotation_check(t, ring));
                }
            }
            out.push(algebras::plus1_triangle_check());
        }
        Suite::Confluence => {
            let max_len = o.max_len.unwrap_or(6);
            for ring in o.rings() {
                for b in o.algebras(&ENGINE) {
                    out.push(algebras::confluence_check(b, ring, max_len));
                }
            }
        }
        Suite::Frobenius => {
            let n = o.n();
            for s in o.surfaces() {
                out.push(frobenius::frobenius_centrality_check(s, n));
            }
            out.push(frobenius::frobenius_compat_check(n));
            out.push(frobenius::qbinomial_check(n, o.ring.map_or_else(|| o.cyclo(), Ok)?));
        }
        Suite::Chebyshev => {
            out.push(frobenius::chebyshev_check(o.n(), o.ring.map_or_else(|| o.cyclo(), Ok)?));
        }
        Suite::Trace => {
            out.push(frobenius::trace_identity_check(o.k.unwrap_or(2), o.n(), o.ring.map_or_else(|| o.cyclo(), Ok)?));
        }
        Suite::Poisson => {
            out.push(poisson::star_examples_check());
            out.push(poisson::rmatrix_check());
            out.push(poisson::orientation_flip_check());
            for s in o.surfaces() {
                out.push(poisson::bracket_property_check(s));
                let orientations = match &o.orientation {
                    Some(x) => vec![x.clone()],
                    None => Orientation::all(s),
                };
                for x in orientations {
                    out.push(poisson::psi_check(s, &x));
                    out.push(poisson::theorem3_check(s, &x));
                }
            }
            out.push(gluing::poisson_gluing_check(Scenario::Square));
        }
        Suite::Gluing => {
            let scenarios = o.scenario.map_or_else(|| Scenario::ALL.to_vec(), |s| vec![s]);
            let ring = o.ring.map_or_else(|| o.cyclo(), Ok)?;
            for s in &scenarios {
                out.push(gluing::gluing_check(*s, ring));
                out.push(gluing::kernel_check(*s, o.kernel_degree.unwrap_or(2), o.n()));
            }
            out.push(gluing::frobenius_glued_check(o.n()));
        }
        Suite::All => {
            for s in Suite::ALL.into_iter().filter(|s| *s != Suite::All) {
                out.extend(run_suite(s, o)?);
            }
        }
    }
    Ok(out)
}

/// Do all reports pass?
pub fn all_passed(reports: &[Report]) -> bool {
    reports.iter().all(Report::passed)
}
