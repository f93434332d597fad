use std::fmt::Write as _;

use garside_core::error::{Error, Result};
use garside_core::low::{GarsideFamily, LowSet};
use garside_core::weak::Element;
use garside_core::CoxeterSystem;
use serde::Serialize;
use serde_json::json;

use crate::args::{AutomatonCommand, Caps, Cli, Command, Format, GarsideCommand, LowCommand, RootsCommand};
use crate::report;

/// Printed text plus the process exit code.
pub struct Outcome {
    pub text: String,
    pub code: u8,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self { text, code: 0 }
    }

    fn verdict(text: String, yes: bool) -> Self {
        Self { text, code: if yes { 0 } else { 1 } }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    if let Command::Report { preset: Some(_) } = cli.command {
        return report::table1(cli.caps, cli.format);
    }
    let system = CoxeterSystem::with_cap(cli.system.matrix()?, cli.caps.cap_small)?;
    let fmt = cli.format;
    match &cli.command {
        Command::Roots(RootsCommand::Small) => roots_small(&system, fmt),
        Command::Low(LowCommand::Enumerate) => low_enumerate(&system, cli.caps, fmt),
        Command::Garside(sub) => garside(&system, cli.caps, sub, fmt),
        Command::Nf { word } => normal_form(&system, cli.caps, &word.join(" "), fmt),
        Command::Eq { a, b } => {
            let (_, fam) = family(&system, cli.caps)?;
            let eq = system.monoid_eq(&system.parse_monoid_word(a)?, &system.parse_monoid_word(b)?, &fam)?;
            Ok(Outcome::verdict(verdict_text(fmt, "equal", eq), eq))
        }
        Command::Divides { f, word } => {
            let f = simple(&system, f)?;
            let yes = system.left_divides(&f, &system.parse_monoid_word(word)?);
            Ok(Outcome::verdict(verdict_text(fmt, "divides", yes), yes))
        }
        Command::Lcm { f, g } => {
            let low = system.enumerate_low(cli.caps.cap_low)?;
            let lcm = system.right_lcm_simple(&simple(&system, f)?, &simple(&system, g)?, &low)?;
            let text = match (fmt, &lcm) {
                (Format::Json, _) => {
                    line(json!({ "lcm": lcm.as_ref().map(|w| system.format_word(w.word())) }).to_string())
                }
                (_, Some(w)) => line(system.format_word(w.word())),
                (_, None) => line("none".into()),
            };
            Ok(Outcome::verdict(text, lcm.is_some()))
        }
        Command::Automaton(AutomatonCommand::Count) => {
            let auto = system.canonical_automaton(cli.caps.cap_states)?;
            let text = match fmt {
                Format::Json => line(json!({ "states": auto.len(), "transitions": auto.edge_count() }).to_string()),
                Format::Dot => auto.to_dot(&system),
                Format::Tsv => format!("states\ttransitions\n{}\t{}\n", auto.len(), auto.edge_count()),
                Format::Text => format!("states: {}\ntransitions: {}\n", auto.len(), auto.edge_count()),
            };
            Ok(Outcome::ok(text))
        }
        Command::Cayley => cayley(&system, cli.caps, fmt),
        Command::Report { preset: None } => {
            let r = report::system_report(&system, &cli.system.label(), cli.caps)?;
            Ok(Outcome::ok(report::render_one(&r, fmt)?))
        }
        Command::Report { preset: Some(_) } => unreachable!("handled above"),
    }
}

pub fn family(system: &CoxeterSystem, caps: Caps) -> Result<(LowSet, GarsideFamily)> {
    let low = system.enumerate_low(caps.cap_low)?;
    let fam = system.smallest_family(&low)?;
    Ok((low, fam))
}

fn line(mut s: String) -> String {
    s.push('\n');
    s
}

fn verdict_text(fmt: Format, key: &str, yes: bool) -> String {
    match fmt {
        Format::Json => line(json!({ key: yes }).to_string()),
        _ => line(yes.to_string()),
    }
}

/// A reduced word naming a simple element; the empty string is the identity.
fn simple(system: &CoxeterSystem, text: &str) -> Result<Element> {
    let word = system.parse_word(text)?;
    if !system.is_reduced(&word) {
        return Err(Error::Parse(format!("`{text}` is not a reduced word")));
    }
    Ok(system.reduce_word(&word))
}

fn unsupported(fmt: Format) -> Error {
    Error::Parse(format!("format {fmt:?} is not supported by this command"))
}

fn roots_small(system: &CoxeterSystem, fmt: Format) -> Result<Outcome> {
    let table = system.small_roots();
    let text = match fmt {
        Format::Json => {
            let roots: Vec<_> = (0..table.len())
                .map(|i| {
                    let root = table.root(i);
                    json!({
                        "index": i,
                        "depth": table.depth(i),
                        "coefficients": root.coefficients().iter().map(|c| match c.as_rational() {
                            Some(q) => q.to_string(),
                            None => c.to_string(),
                        }).collect::<Vec<_>>(),
                    })
                })
                .collect();
            line(json!({ "count": table.len(), "roots": roots }).to_string())
        }
        Format::Tsv | Format::Text => {
            let mut out = String::new();
            if fmt == Format::Tsv {
                out.push_str("index\tdepth\troot\n");
            } else {
                let _ = writeln!(out, "small roots: {}", table.len());
            }
            for i in 0..table.len() {
                let _ = writeln!(out, "{i}\t{}\t{}", table.depth(i), table.root(i));
            }
            out
        }
        Format::Dot => return Err(unsupported(fmt)),
    };
    Ok(Outcome::ok(text))
}

fn element_list(system: &CoxeterSystem, elements: &[Element], fmt: Format, key: &str) -> Result<String> {
    let names: Vec<String> = elements.iter().map(|e| system.format_element(e)).collect();
    Ok(match fmt {
        Format::Json => line(
            json!({
                "system": system.matrix().to_document(),
                "count": names.len(),
                key: names,
            })
            .to_string(),
        ),
        Format::Tsv => {
            let mut out = String::from("index\tlength\telement\n");
            for (i, (e, n)) in elements.iter().zip(&names).enumerate() {
                let _ = writeln!(out, "{i}\t{}\t{n}", e.len());
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for n in &names {
                let _ = writeln!(out, "{n}");
            }
            out
        }
        Format::Dot => return Err(unsupported(fmt)),
    })
}

fn low_enumerate(system: &CoxeterSystem, caps: Caps, fmt: Format) -> Result<Outcome> {
    let low = system.enumerate_low(caps.cap_low)?;
    Ok(Outcome::ok(element_list(system, low.elements(), fmt, "elements")?))
}

fn garside(system: &CoxeterSystem, caps: Caps, sub: &GarsideCommand, fmt: Format) -> Result<Outcome> {
    let (low, fam) = family(system, caps)?;
    match sub {
        GarsideCommand::Family => Ok(Outcome::ok(element_list(system, fam.members(), fmt, "elements")?)),
        GarsideCommand::Extremals => Ok(Outcome::ok(element_list(system, fam.extremal(), fmt, "elements")?)),
        GarsideCommand::Verify => {
            let closure = low.check_closure(system);
            let fam_report = system.verify_family(&fam, &low)?;
            let passed = closure.passed() && fam_report.passed();
            #[derive(Serialize)]
            struct Check {
                check: &'static str,
                passed: bool,
                violations: usize,
            }
            let checks = [
                Check {
                    check: "low_contains_generators",
                    passed: closure.missing_generators.is_empty(),
                    violations: closure.missing_generators.len(),
                },
                Check {
                    check: "low_suffix_closed",
                    passed: closure.suffix_violations.is_empty(),
                    violations: closure.suffix_violations.len(),
                },
                Check {
                    check: "low_joins_unique",
                    passed: closure.join_ambiguities.is_empty(),
                    violations: closure.join_ambiguities.len(),
                },
                Check {
                    check: "family_seeds",
                    passed: fam_report.missing_seeds.is_empty(),
                    violations: fam_report.missing_seeds.len(),
                },
                Check {
                    check: "family_suffix_closed",
                    passed: fam_report.suffix_violations.is_empty(),
                    violations: fam_report.suffix_violations.len(),
                },
                Check {
                    check: "family_join_closed",
                    passed: fam_report.join_violations.is_empty(),
                    violations: fam_report.join_violations.len(),
                },
                Check {
                    check: "family_inside_low",
                    passed: fam_report.outside_low.is_empty(),
                    violations: fam_report.outside_low.len(),
                },
                Check {
                    check: "family_provenance_grounded",
                    passed: fam_report.ungrounded.is_empty(),
                    violations: fam_report.ungrounded.len(),
                },
            ];
            let text = match fmt {
                Format::Json => line(
                    serde_json::to_string(&json!({ "passed": passed, "checks": checks }))
                        .map_err(|e| Error::Parse(e.to_string()))?,
                ),
                Format::Tsv => {
                    let mut out = String::from("check\tpassed\tviolations\n");
                    for c in &checks {
                        let _ = writeln!(out, "{}\t{}\t{}", c.check, c.passed, c.violations);
                    }
                    out
                }
                Format::Text => {
                    let mut out = String::new();
                    for c in &checks {
                        let _ = writeln!(
                            out,
                            "{:<28} {}",
                            c.check,
                            if c.passed { "ok".to_string() } else { format!("{} violations", c.violations) }
                        );
                    }
                    out
                }
                Format::Dot => return Err(unsupported(fmt)),
            };
            Ok(Outcome::verdict(text, passed))
        }
    }
}

fn normal_form(system: &CoxeterSystem, caps: Caps, text: &str, fmt: Format) -> Result<Outcome> {
    let (_, fam) = family(system, caps)?;
    let word = system.parse_monoid_word(text)?;
    let nf = system.f_normal_form(&word, &fam)?;
    let out = match fmt {
        Format::Json => {
            let entries: Vec<Vec<&str>> =
                nf.entries.iter().map(|e| e.word().iter().map(|&s| system.matrix().name(s)).collect()).collect();
            line(json!({ "lambda": nf.lambda(), "entries": entries }).to_string())
        }
        Format::Text | Format::Tsv => line(system.format_normal_form(&nf)),
        Format::Dot => return Err(unsupported(fmt)),
    };
    Ok(Outcome::ok(out))
}

/// Edges `u -> s*u` inside the family with `l(s*u) = l(u) + 1`.
pub fn cayley_edges(system: &CoxeterSystem, fam: &GarsideFamily) -> Vec<(usize, String, usize)> {
    let members = fam.members();
    let index: std::collections::HashMap<&Element, usize> = members.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut edges = Vec::new();
    for (i, u) in members.iter().enumerate() {
        for s in system.generators().filter(|&s| !system.is_left_descent(u, s)) {
            if let Some(&j) = index.get(&system.left_mul(s, u)) {
                edges.push((i, system.format_element_word(&[s]), j));
            }
        }
    }
    edges
}

fn cayley(system: &CoxeterSystem, caps: Caps, fmt: Format) -> Result<Outcome> {
    let (_, fam) = family(system, caps)?;
    let names: Vec<String> = fam.members().iter().map(|e| system.format_element(e)).collect();
    let edges = cayley_edges(system, &fam);
    let text = match fmt {
        Format::Dot | Format::Text => {
            let mut out = String::new();
            out.push_str("// Cayley graph of the smallest Garside family.\n");
            out.push_str("// Edge u -> v labeled s means v = s*u (left multiplication) and l(v) = l(u) + 1.\n");
            out.push_str("digraph family {\n");
            for (i, n) in names.iter().enumerate() {
                let _ = writeln!(out, "  n{i} [label=\"{n}\"];");
            }
            for (a, s, b) in &edges {
                let _ = writeln!(out, "  n{a} -> n{b} [label=\"{s}\"];");
            }
            out.push_str("}\n");
            out
        }
        Format::Tsv => {
            let mut out = String::from("source\tgenerator\ttarget\n");
            for (a, s, b) in &edges {
                let _ = writeln!(out, "{}\t{s}\t{}", names[*a], names[*b]);
            }
            out
        }
        Format::Json => {
            let edges: Vec<_> = edges
                .iter()
                .map(|(a, s, b)| json!({ "source": names[*a], "generator": s, "target": names[*b] }))
                .collect();
            line(json!({ "convention": "left multiplication u -> s*u", "nodes": names, "edges": edges }).to_string())
        }
    };
    Ok(Outcome::ok(text))
}
