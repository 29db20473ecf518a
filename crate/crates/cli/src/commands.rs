//! Command dispatch: spec text in, [`Report`] out.

use std::path::Path;
use std::time::Instant;

use gmr_core::radical::{
    gamma_baer_radical, ideal_primality, radical, verify_radical_theorems, w_set, RadicalResult, RadicalWitness,
};
use gmr_core::ring::{enumerate_ideals, gm_ideal_closure, quotient, verify_iso_theorems};
use gmr_core::verdict::{Status, Verdict};
use gmr_core::{Error, Flavor, GMIdeal, GMRing, GammaSystem, Limits, Method};

use crate::report::{Input, Report, Section};
use crate::spec::{build_system, parse_spec, to_value, BuildError, RingSpecDocument};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MethodChoice {
    One(Method),
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Iso,
    Radical,
    All,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Check,
    Radical(MethodChoice),
    Ideals(Flavor),
    Quotient(String),
    Components,
    Verify(Suite),
}

impl Command {
    /// The command as it would be typed, for the report header.
    pub fn echo(&self) -> String {
        match self {
            Command::Check => "check".into(),
            Command::Radical(MethodChoice::All) => "radical --method all".into(),
            Command::Radical(MethodChoice::One(m)) => format!("radical --method {}", method_flag(*m)),
            Command::Ideals(f) => format!("ideals --flavor {}", f.name()),
            Command::Quotient(n) => format!("quotient --ideal {n}"),
            Command::Components => "components".into(),
            Command::Verify(s) => format!(
                "verify --suite {}",
                match s {
                    Suite::Iso => "iso",
                    Suite::Radical => "radical",
                    Suite::All => "all",
                }
            ),
        }
    }
}

pub fn method_flag(m: Method) -> &'static str {
    match m {
        Method::MNilpotent => "m",
        Method::PrimesGm => "primes-gm",
        Method::PrimesRing => "primes-ring",
        Method::NilpotentIdeal => "nilpotent",
        Method::GmMaximal => "gm-max",
    }
}

/// Cap overrides from the command line; they win over the spec's `caps`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Flags {
    pub max_order: Option<usize>,
    pub max_lattice: Option<usize>,
    pub max_radical: Option<usize>,
    pub timing: bool,
}

pub mod exit {
    pub const OK: i32 = 0;
    pub const VIOLATION: i32 = 1;
    pub const INVALID: i32 = 2;
    pub const RESOURCE: i32 = 3;
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidInput(_) => exit::INVALID,
        Error::ResourceLimit { .. } => exit::RESOURCE,
        Error::Violation(_) => exit::VIOLATION,
    }
}

fn fail(report: &mut Report, e: &Error) {
    report.error = Some(e.to_string());
    report.exit = exit_code(e);
}

/// Reads a spec file and runs one command on it. IO failures are invalid input.
pub fn run_file(path: &Path, command: &Command, flags: &Flags) -> Report {
    let file = path.file_name().map_or_else(|| path.display().to_string(), |f| f.to_string_lossy().into_owned());
    match std::fs::read(path) {
        Ok(bytes) => run_bytes(&file, &bytes, command, flags),
        Err(e) => {
            let mut r = Report::new(command.echo());
            r.error = Some(format!("cannot read {}: {e}", path.display()));
            r.exit = exit::INVALID;
            r
        }
    }
}

pub fn run_bytes(file: &str, bytes: &[u8], command: &Command, flags: &Flags) -> Report {
    let start = Instant::now();
    let mut report = Report::new(command.echo());
    let mut input = Input::new(file, bytes);
    let parsed = std::str::from_utf8(bytes)
        .map_err(|_| crate::spec::Diagnostic {
            code: crate::spec::codes::SYNTAX,
            path: "$".into(),
            message: "input is not UTF-8".into(),
        })
        .and_then(parse_spec);
    match parsed {
        Ok(doc) => {
            input.spec = Some(to_value(&doc));
            report.input = Some(input);
            run_command(&doc, command, flags, &mut report);
        }
        Err(d) => {
            report.input = Some(input);
            report.error = Some(d.to_string());
            report.exit = exit::INVALID;
        }
    }
    if flags.timing {
        report.timing_ms = Some(start.elapsed().as_millis());
    }
    report
}

pub fn limits_for(doc: &RingSpecDocument, flags: &Flags) -> Limits {
    let mut l = doc.caps.apply(Limits::default());
    if let Some(v) = flags.max_order {
        l.max_order = v;
    }
    if let Some(v) = flags.max_lattice {
        l.max_lattice = v;
    }
    if let Some(v) = flags.max_radical {
        l.max_radical = v;
    }
    l
}

/// Runs `command` on a parsed document, filling `report`.
pub fn run_command(doc: &RingSpecDocument, command: &Command, flags: &Flags, report: &mut Report) {
    let limits = limits_for(doc, flags);
    let system = match build_system(doc, &limits) {
        Ok(s) => s,
        Err(BuildError::Diagnostic(d)) => {
            report.error = Some(d.to_string());
            report.exit = exit::INVALID;
            return;
        }
        Err(BuildError::Core(e)) => return fail(report, &e),
    };
    if let Some(n) = &doc.name {
        report.fact("name", n.clone());
    }
    report.fact("construction", doc.construction.kind());
    summarize_system(&system, report);
    if let Err(e) = dispatch(doc, &system, command, &limits, report) {
        fail(report, &e);
    } else if report.verdicts.iter().any(Verdict::failed) {
        report.exit = exit::VIOLATION;
    }
}

fn summarize_system(system: &GammaSystem, report: &mut Report) {
    report.fact("labels", system.labels().join(" "));
    match system.total_order() {
        Some(o) => report.fact("order", o.to_string()),
        None => report.fact("order", "overflow"),
    }
    let n = system.size();
    let mut s = Section::new("components", &["pair", "group", "order"]);
    for i in 0..n {
        for j in 0..n {
            let g = system.component(i, j);
            s.row(vec![pair(system, i, j), g.to_string(), g.order().to_string()]);
        }
    }
    report.sections.push(s);
}

fn pair(system: &GammaSystem, i: usize, j: usize) -> String {
    let l = system.labels();
    format!("{},{}", l[i], l[j])
}

fn dispatch(
    doc: &RingSpecDocument,
    system: &GammaSystem,
    command: &Command,
    limits: &Limits,
    report: &mut Report,
) -> Result<(), Error> {
    match command {
        Command::Check => check(system, limits, report).map(|_| ()),
        Command::Radical(choice) => {
            let ring = GMRing::assemble(system.clone(), limits)?;
            radicals(&ring, *choice, limits, report)
        }
        Command::Ideals(flavor) => ideals(&assemble(system, limits)?, *flavor, limits, report),
        Command::Quotient(name) => quotient_cmd(doc, &assemble(system, limits)?, name, limits, report),
        Command::Components => components(system, limits, report),
        Command::Verify(suite) => {
            let ring = match check(system, limits, report)? {
                Some(r) => r,
                None => return Ok(()),
            };
            if matches!(suite, Suite::Iso | Suite::All) {
                iso_suite(&ring, limits, report)?;
            }
            if matches!(suite, Suite::Radical | Suite::All) {
                radical_suite(system, limits, report)?;
            }
            Ok(())
        }
    }
}

fn assemble(system: &GammaSystem, limits: &Limits) -> Result<GMRing, Error> {
    GMRing::assemble(system.clone(), limits)
}

/// Γ-axioms then the ring self-test. Returns the ring when both hold.
fn check(system: &GammaSystem, limits: &Limits, report: &mut Report) -> Result<Option<GMRing>, Error> {
    let total = system.total_order().unwrap_or(usize::MAX);
    if total > limits.max_order {
        return Err(Error::ResourceLimit {
            what: "ring order",
            size: total,
            cap: limits.max_order,
        });
    }
    let ax = system.check_axioms();
    report.verdicts.push(Verdict::new(
        "Gamma axioms hold",
        ax.passed(),
        format!("{} instances checked, {} violations", ax.instances_checked, ax.total_violations),
    ));
    if !ax.passed() {
        let mut s = Section::new("axiom violations", &["axiom", "indices", "witness"]);
        for v in &ax.violations {
            let idx: Vec<&str> = v.indices.iter().map(|&k| system.labels()[k].as_str()).collect();
            s.row(vec![
                v.axiom.name().into(),
                format!("({})", idx.join(",")),
                system.describe_violation(v),
            ]);
        }
        report.sections.push(s);
        return Ok(None);
    }
    let ring = GMRing::assemble(system.clone(), limits)?;
    let st = ring.self_test(limits);
    let scope = if ring.order() <= limits.max_lattice { "exhaustive" } else { "on generators" };
    report.verdicts.push(Verdict::new(
        "ring axioms hold",
        st.is_none(),
        st.unwrap_or_else(|| format!("{scope}, order {}", ring.order())),
    ));
    Ok(Some(ring))
}

fn show_set(ring: &GMRing, members: &[usize]) -> String {
    let els: Vec<String> = members.iter().map(|&x| ring.format_element(x)).collect();
    format!("{{{}}}", els.join("; "))
}

fn witness_text(ring: &GMRing, r: &RadicalResult) -> String {
    match &r.witness {
        RadicalWitness::MNilpotent {
            persistent,
            edges,
            componentwise,
            sample,
        } => {
            let mut s = format!("{persistent} persistent nodes, {edges} edges");
            if let Some(c) = componentwise {
                s.push_str(if *c { ", g.m. ideal" } else { ", NOT a g.m. ideal" });
            }
            if let Some(c) = sample {
                s.push_str(&format!("; {c}"));
            }
            s
        }
        RadicalWitness::Primes { primes } => {
            let ps: Vec<String> = primes.iter().map(|p| show_set(ring, p)).collect();
            if ps.is_empty() {
                "no proper prime ideals".into()
            } else {
                format!("{} primes: {}", ps.len(), ps.join(", "))
            }
        }
        RadicalWitness::Nilpotent {
            exponent,
            nilpotent_ideals,
        } => format!("exponent {exponent}, {nilpotent_ideals} nilpotent ideals"),
        RadicalWitness::GmMaximal { candidates } => format!("unique maximum of {candidates} r_b-g.m.-ideals"),
    }
}

fn radical_section(ring: &GMRing, results: &[RadicalResult]) -> Section {
    let mut s = Section::new("radicals", &["method", "order", "members", "witness"]);
    for r in results {
        s.row(vec![
            r.method.name().into(),
            r.members.order().to_string(),
            show_set(ring, r.members()),
            witness_text(ring, r),
        ]);
    }
    s
}

fn radicals(ring: &GMRing, choice: MethodChoice, limits: &Limits, report: &mut Report) -> Result<(), Error> {
    let methods: Vec<Method> = match choice {
        MethodChoice::One(m) => vec![m],
        MethodChoice::All => Method::ALL.to_vec(),
    };
    let mut results = Vec::new();
    for m in methods {
        results.push(radical(ring, m, limits)?);
    }
    report.sections.push(radical_section(ring, &results));
    if choice == MethodChoice::All {
        let agree = results.windows(2).all(|p| p[0].members == p[1].members);
        let detail: Vec<String> =
            results.iter().map(|r| format!("{}={}", r.method.name(), r.members.order())).collect();
        report.verdicts.push(Verdict::new("five radical engines agree", agree, detail.join(" ")));
    }
    Ok(())
}

fn ideals(ring: &GMRing, flavor: Flavor, limits: &Limits, report: &mut Report) -> Result<(), Error> {
    let all = enumerate_ideals(ring, flavor, limits)?;
    report.fact("ideals", all.len().to_string());
    let mut s = Section::new(format!("{} ideals", flavor.name()), &["#", "order", "primality", "members"]);
    for (k, ideal) in all.iter().enumerate() {
        let p = if ideal.is_whole() {
            "improper".to_string()
        } else {
            ideal_primality(ring, ideal)?.primality.name().to_string()
        };
        s.row(vec![k.to_string(), ideal.order().to_string(), p, show_set(ring, ideal.members())]);
    }
    report.sections.push(s);
    Ok(())
}

fn named_ideal(doc: &RingSpecDocument, ring: &GMRing, name: &str) -> Result<GMIdeal, Error> {
    let gens = doc
        .named_ideals
        .get(name)
        .ok_or_else(|| Error::InvalidInput(format!("no ideal named {name:?} in $.named_ideals")))?;
    let mut seeds = Vec::new();
    for (n, g) in gens.iter().enumerate() {
        let x = ring.parse_element(g).map_err(|e| {
            Error::InvalidInput(format!("E005 at $.named_ideals.{name}[{n}]: {e}"))
        })?;
        seeds.push(x);
    }
    gm_ideal_closure(ring, &seeds, Flavor::Gm)
}

fn quotient_cmd(
    doc: &RingSpecDocument,
    ring: &GMRing,
    name: &str,
    limits: &Limits,
    report: &mut Report,
) -> Result<(), Error> {
    let b = named_ideal(doc, ring, name)?;
    report.fact("ideal", format!("{name}, order {}", b.order()));
    let mut s = Section::new("ideal members", &["element"]);
    for &x in b.members() {
        s.row(vec![ring.format_element(x)]);
    }
    report.sections.push(s);
    let q = quotient(ring, &b, limits)?;
    let qr = q.ring();
    report.fact("quotient order", qr.order().to_string());
    let n = qr.size();
    let mut s = Section::new("quotient components", &["pair", "group", "order"]);
    for i in 0..n {
        for j in 0..n {
            let g = qr.component(i, j);
            s.row(vec![pair(qr.system(), i, j), g.to_string(), g.order().to_string()]);
        }
    }
    report.sections.push(s);
    let mut s = Section::new("cosets", &["class", "representative"]);
    for y in 0..qr.order() {
        s.row(vec![qr.format_element(y), ring.format_element(q.subquotient.lift(y))]);
    }
    report.sections.push(s);
    let w = w_set(qr, limits)?;
    report.fact("quotient radical", show_set(qr, w.members()));
    Ok(())
}

fn components(system: &GammaSystem, limits: &Limits, report: &mut Report) -> Result<(), Error> {
    let n = system.size();
    let mut s = Section::new("component radicals", &["pair", "multipliers", "order", "members"]);
    for i in 0..n {
        for j in 0..n {
            let r = gamma_baer_radical(system, i, j, limits)?;
            let g = system.component(i, j);
            let els: Vec<String> = r.members().iter().map(|&x| g.element(x).to_string()).collect();
            s.row(vec![
                pair(system, i, j),
                format!("A_({}) = {}", pair(system, j, i), system.component(j, i)),
                r.members.order().to_string(),
                format!("{{{}}}", els.join(" ")),
            ]);
        }
    }
    report.sections.push(s);
    Ok(())
}

const ISO_CLAIMS: [&str; 6] = [
    "quotient A//B well defined",
    "quotient A//C well defined",
    "A//ker(psi) ~ psi(A)",
    "(B+C)//C ~ B//(B cap C)",
    "A//B ~ (A//C)//(B//C)",
    "ideal correspondence D -> psi(D) is a bijection",
];

/// Every isomorphism certificate over all pairs of g.m. ideals, tallied per claim.
fn iso_suite(ring: &GMRing, limits: &Limits, report: &mut Report) -> Result<(), Error> {
    let all = enumerate_ideals(ring, Flavor::Gm, limits)?;
    let mut tally = [(0usize, 0usize, 0usize); 6];
    let mut first_fail: [Option<String>; 6] = Default::default();
    for (bi, b) in all.iter().enumerate() {
        for (ci, c) in all.iter().enumerate() {
            let rep = verify_iso_theorems(ring, b, c, None, limits)?;
            for v in rep.verdicts {
                let k = ISO_CLAIMS.iter().position(|c| *c == v.claim).expect("known claim");
                match v.status {
                    Status::Pass => tally[k].0 += 1,
                    Status::Skipped => tally[k].1 += 1,
                    Status::Fail => {
                        tally[k].2 += 1;
                        first_fail[k].get_or_insert_with(|| format!("B=#{bi} C=#{ci}: {}", v.detail));
                    }
                }
            }
        }
    }
    report.fact("g.m. ideals", all.len().to_string());
    for (k, claim) in ISO_CLAIMS.iter().enumerate() {
        let (p, s, f) = tally[k];
        let mut detail = format!("{p} pass, {s} skip, {f} fail over {} pairs", all.len() * all.len());
        if let Some(w) = &first_fail[k] {
            detail.push_str(&format!("; first failure {w}"));
        }
        report.verdicts.push(Verdict::new(*claim, f == 0, detail));
    }
    Ok(())
}

fn radical_suite(system: &GammaSystem, limits: &Limits, report: &mut Report) -> Result<(), Error> {
    let rep = verify_radical_theorems(system, limits)?;
    report.sections.push(radical_section(&rep.ring, &rep.radicals));
    let mut s = Section::new("decomposition", &["pair", "component radical", "component of W(A)", "match"]);
    for row in &rep.components {
        let g = system.component(row.i, row.j);
        let show = |h: &gmr_core::Subgroup| {
            let els: Vec<String> = h.members().iter().map(|&x| g.element(x).to_string()).collect();
            format!("{{{}}}", els.join(" "))
        };
        s.row(vec![
            pair(system, row.i, row.j),
            show(&row.gamma),
            show(&row.from_w),
            if row.gamma == row.from_w { "yes" } else { "NO" }.into(),
        ]);
    }
    report.sections.push(s);
    report.verdicts.extend(rep.verdicts);
    Ok(())
}

/// Runs a command over every `*.json` file in `dir`, in file-name order.
pub fn run_corpus(dir: &Path, command: &Command, flags: &Flags) -> Result<Vec<Report>, String> {
    let mut files: Vec<_> = std::fs::read_dir(dir)
        .map_err(|e| format!("cannot read {}: {e}", dir.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    Ok(files.iter().map(|p| run_file(p, command, flags)).collect())
}
