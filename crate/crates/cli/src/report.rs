use std::fmt::Write as _;

use garside_core::coxeter::{catalog, CatalogSpec};
use garside_core::error::{Error, Result};
use garside_core::low::OracleKind;
use garside_core::CoxeterSystem;
use serde::Serialize;

use crate::args::{Caps, Format};
use crate::commands::{family, Outcome};

#[derive(Debug, Serialize)]
pub struct SystemReport {
    pub system: String,
    pub generators: usize,
    pub small_roots: usize,
    pub low: usize,
    pub family: usize,
    pub extremal_count: usize,
    pub extremal: Vec<String>,
    pub low_not_in_family: Vec<String>,
    pub automaton_states: usize,
    pub oracle: Option<String>,
    pub oracle_agrees: Option<bool>,
    pub note: Option<String>,
}

pub fn system_report(system: &CoxeterSystem, label: &str, caps: Caps) -> Result<SystemReport> {
    let (low, fam) = family(system, caps)?;
    let auto = system.canonical_automaton(caps.cap_states)?;
    let (oracle, oracle_agrees, note) = match system.type_oracle(caps.cap_bfs) {
        Ok(o) => {
            let agrees = o.elements.as_slice() == fam.members() && o.elements.as_slice() == low.elements();
            let note = (o.kind == OracleKind::Spherical).then(|| "spherical: π(F) = W".to_string());
            let kind = match o.kind {
                OracleKind::Spherical => "spherical",
                OracleKind::LargeType => "large type",
                OracleKind::RightAngled => "right-angled",
            };
            (Some(kind.to_string()), Some(agrees), note)
        }
        Err(Error::NotApplicable) => (None, None, None),
        Err(e) => return Err(e),
    };
    Ok(SystemReport {
        system: label.to_string(),
        generators: system.rank(),
        small_roots: system.small_roots().len(),
        low: low.len(),
        family: fam.len(),
        extremal_count: fam.extremal().len(),
        extremal: fam.extremal().iter().map(|e| system.format_element(e)).collect(),
        low_not_in_family: low
            .elements()
            .iter()
            .filter(|x| !fam.contains(x))
            .map(|x| system.format_element(x))
            .collect(),
        automaton_states: auto.len(),
        oracle,
        oracle_agrees,
        note,
    })
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    serde_json::to_string_pretty(value)
        .map(|mut s| {
            s.push('\n');
            s
        })
        .map_err(|e| Error::Parse(e.to_string()))
}

pub fn render_one(r: &SystemReport, fmt: Format) -> Result<String> {
    Ok(match fmt {
        Format::Json => to_json(r)?,
        Format::Tsv => {
            let mut out = String::from("system\tgenerators\tsmall_roots\tlow\tfamily\textremal\tautomaton_states\n");
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                r.system, r.generators, r.small_roots, r.low, r.family, r.extremal_count, r.automaton_states
            );
            out
        }
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "system:            {}", r.system);
            let _ = writeln!(out, "generators:        {}", r.generators);
            let _ = writeln!(out, "small roots:       {}", r.small_roots);
            let _ = writeln!(out, "low elements:      {}", r.low);
            let _ = writeln!(out, "family:            {}", r.family);
            let _ = writeln!(out, "extremal:          {}", r.extremal_count);
            for e in &r.extremal {
                let _ = writeln!(out, "  {e}");
            }
            let _ = writeln!(out, "low not in family: {}", r.low_not_in_family.len());
            for e in &r.low_not_in_family {
                let _ = writeln!(out, "  {e}");
            }
            let _ = writeln!(out, "automaton states:  {}", r.automaton_states);
            if let (Some(kind), Some(agrees)) = (&r.oracle, r.oracle_agrees) {
                let _ = writeln!(out, "oracle:            {kind}, {}", if agrees { "agrees" } else { "DISAGREES" });
            }
            if let Some(note) = &r.note {
                let _ = writeln!(out, "note:              {note}");
            }
            out
        }
        Format::Dot => return Err(Error::Parse("format Dot is not supported by this command".into())),
    })
}

/// Reference `(type, rank, #E, #F)` for the `table1` preset.
pub const TABLE1: [(&str, usize, usize, usize); 6] = [
    ("affineA", 2, 3, 16),
    ("affineA", 3, 10, 125),
    ("affineA", 4, 35, 1296),
    ("affineB", 3, 14, 315),
    ("affineC", 2, 3, 24),
    ("affineC", 3, 12, 317),
];

#[derive(Debug, Serialize)]
struct Row {
    system: String,
    extremal: usize,
    family: usize,
    expected_extremal: usize,
    expected_family: usize,
    low: usize,
    matches: bool,
}

pub fn table1(caps: Caps, fmt: Format) -> Result<Outcome> {
    let mut rows = Vec::new();
    for (ty, rank, e, f) in TABLE1 {
        let system = CoxeterSystem::with_cap(
            catalog(&CatalogSpec { ty: ty.into(), rank: Some(rank), ..Default::default() })?,
            caps.cap_small,
        )?;
        let (low, fam) = family(&system, caps)?;
        rows.push(Row {
            system: format!("{ty}{rank}"),
            extremal: fam.extremal().len(),
            family: fam.len(),
            expected_extremal: e,
            expected_family: f,
            low: low.len(),
            matches: fam.extremal().len() == e && fam.len() == f,
        });
    }
    let all = rows.iter().all(|r| r.matches);
    let text = match fmt {
        Format::Json => to_json(&rows)?,
        Format::Tsv | Format::Text => {
            let mut out = String::from("system\t#E\t#F\texpected #E\texpected #F\t|L|\tstatus\n");
            for r in &rows {
                let _ = writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    r.system,
                    r.extremal,
                    r.family,
                    r.expected_extremal,
                    r.expected_family,
                    r.low,
                    if r.matches { "ok" } else { "MISMATCH" }
                );
            }
            out
        }
        Format::Dot => return Err(Error::Parse("format Dot is not supported by this command".into())),
    };
    Ok(Outcome { text, code: if all { 0 } else { 1 } })
}
