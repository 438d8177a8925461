//! One function per subcommand, each producing a [`Report`].

use gset_fourier::analysis::{
    bent_existence_precondition, bent_report, derivative_counts, is_g_linear, is_pnl_direct, is_pnl_via_bent,
    BentCriterion, GroupValuedFunction, PnlMode,
};
use gset_fourier::search::{candidate_count, search_bent_with, search_pnl_with};
use gset_fourier::spectral::{
    classical_decomposition, component_dimensions, linearity_defect, spectral_energy_by_psi, verify_gdual,
};
use gset_fourier::{Error, FiniteAbelianGroup, GDual};
use serde_json::{Map, Value};

use crate::problem::{InputError, Problem};
use crate::report::{
    complex_text, complexes, element, element_name, fixed, integers, join, real, reals, usizes, Report,
    Status,
};

/// Failures that stop a command before a report exists.
#[derive(Debug)]
pub enum Failure {
    Input(String),
    Budget(String),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Input(e.0)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum CriterionArg {
    Spectral,
    Derivatives,
    Poinsot,
    All,
}

impl CriterionArg {
    fn criteria(self) -> Vec<BentCriterion> {
        match self {
            CriterionArg::Spectral => vec![BentCriterion::Spectral],
            CriterionArg::Derivatives => vec![BentCriterion::Derivatives],
            CriterionArg::Poinsot => vec![BentCriterion::Poinsot],
            CriterionArg::All => BentCriterion::ALL.to_vec(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum ModeArg {
    Direct,
    #[value(name = "via_bent", alias = "via-bent")]
    ViaBent,
    Both,
}

impl ModeArg {
    fn modes(self) -> Vec<PnlMode> {
        match self {
            ModeArg::Direct => vec![PnlMode::Direct],
            ModeArg::ViaBent => vec![PnlMode::ViaBent],
            ModeArg::Both => vec![PnlMode::Direct, PnlMode::ViaBent],
        }
    }
}

fn criterion_name(c: BentCriterion) -> &'static str {
    match c {
        BentCriterion::Spectral => "spectral",
        BentCriterion::Derivatives => "derivatives",
        BentCriterion::Poinsot => "poinsot",
    }
}

fn mode_name(m: PnlMode) -> &'static str {
    match m {
        PnlMode::Direct => "direct",
        PnlMode::ViaBent => "via_bent",
    }
}

fn psi_name(psi: usize) -> String {
    format!("ψ{}", psi + 1)
}

fn gdual_value(dual: &GDual) -> Value {
    Value::Array(dual.lambdas().iter().map(|l| complexes(l.values())).collect())
}

fn psi_labels(dual: &GDual) -> Value {
    Value::Array(
        (0..dual.len())
            .map(|i| Value::from(dual.psi_of(i) as u64))
            .collect(),
    )
}

/// Energies that agree within `tol` relative are reported as one value.
fn energy_phrase(energies: &[f64], tol: f64) -> String {
    let hi = energies.iter().cloned().fold(f64::MIN, f64::max);
    let lo = energies.iter().cloned().fold(f64::MAX, f64::min);
    if hi - lo <= tol * hi.abs().max(1.0) {
        format!("energy {} per character", fixed(hi))
    } else {
        let parts: Vec<String> = energies.iter().map(|&e| fixed(e)).collect();
        format!("energies {}", parts.join(","))
    }
}

pub fn info(p: &Problem, tol: f64) -> Result<Report, Failure> {
    let x = &p.gset;
    let g = x.group();
    let orbits = x.orbits();
    let kernel = x.action_kernel();
    let dims = component_dimensions(x);
    let pre = bent_existence_precondition(x);

    let mut r = Report::new("info", tol);
    let bent = if pre.possible {
        "YES (necessary condition)".to_string()
    } else {
        let names: Vec<String> = pre.empty.iter().map(|&k| psi_name(k)).collect();
        format!("NO ({} empty)", names.join(", "))
    };
    r.line(format!(
        "orbits: {}; faithful: {}; dims: {}; bent possible: {}",
        orbits.len(),
        if x.is_faithful() { "yes" } else { "no" },
        join(&dims, ","),
        bent
    ));
    r.line(format!(
        "group: [{}], order {}; points: {}",
        join(g.invariants(), ","),
        g.order(),
        x.points()
    ));
    let orbit_text: Vec<String> = orbits.iter().map(|o| format!("{{{}}}", join(o, ","))).collect();
    r.line(format!("orbit sets: {}", orbit_text.join(" ")));
    let kernel_text: Vec<String> = kernel.iter().map(|&a| element_name(g, a)).collect();
    r.line(format!("kernel: {}", kernel_text.join(" ")));

    r.set("verdict", Value::Bool(pre.possible));
    r.set("group", usizes(g.invariants()));
    r.set("points", Value::from(x.points() as u64));
    r.set("orbits", Value::Array(orbits.iter().map(|o| usizes(o)).collect()));
    r.set(
        "kernel",
        Value::Array(kernel.iter().map(|&a| element(g, a)).collect()),
    );
    r.set("faithful", Value::Bool(x.is_faithful()));
    r.set("dimensions", usizes(&dims));
    r.set("empty_components", usizes(&pre.empty));
    Ok(r)
}

pub fn dual(p: &Problem, tol: f64) -> Result<Report, Failure> {
    let x = &p.gset;
    let d = GDual::build(x);
    let mut r = Report::new("dual", tol);
    r.line(format!(
        "G-dual of {} points (rows scaled to norm √{})",
        x.points(),
        x.points()
    ));
    for (i, l) in d.lambdas().iter().enumerate() {
        let vals: Vec<String> = l.iter().map(|&z| complex_text(z)).collect();
        r.line(format!(
            "λ{} [{}, conjugate λ{}]: {}",
            i + 1,
            psi_name(d.psi_of(i)),
            d.conj_partner(i) + 1,
            vals.join(" ")
        ));
    }
    r.set("gdual", gdual_value(&d));
    r.set("psi", psi_labels(&d));
    r.set(
        "conjugate",
        Value::Array(
            (0..d.len())
                .map(|i| Value::from(d.conj_partner(i) as u64))
                .collect(),
        ),
    );
    Ok(r)
}

pub fn fourier(p: &Problem, tol: f64) -> Result<Report, Failure> {
    let x = &p.gset;
    let f = p.complex_function()?;
    let d = GDual::build(x);
    let spectrum = d.fourier(&f)?;
    let energies = spectral_energy_by_psi(&f, &d)?;
    let mut r = Report::new("fourier", tol);
    for i in 0..d.len() {
        r.line(format!(
            "f̂(λ{}) [{}] = {}",
            i + 1,
            psi_name(d.psi_of(i)),
            complex_text(spectrum.get(i))
        ));
    }
    let parts: Vec<String> = energies.iter().map(|&e| fixed(e)).collect();
    r.line(format!("energy by character: {}", parts.join(",")));
    r.set("spectrum", complexes(spectrum.values().values()));
    r.set("energies", reals(&energies));
    r.set("psi", psi_labels(&d));
    r.set("gdual", gdual_value(&d));
    Ok(r)
}

pub fn decompose(p: &Problem, tol: f64) -> Result<Report, Failure> {
    let x = &p.gset;
    let f = p.complex_function()?;
    let parts = classical_decomposition(x, &f)?;
    let mut r = Report::new("decompose", tol);
    let mut defects = Vec::with_capacity(parts.len());
    for (psi, c) in parts.iter().enumerate() {
        let vals: Vec<String> = c.iter().map(|&z| complex_text(z)).collect();
        r.line(format!("{}: {}", psi_name(psi), vals.join(" ")));
        defects.push(linearity_defect(x, psi, c));
    }
    let norms: Vec<f64> = parts.iter().map(|c| c.norm_sqr()).collect();
    r.set(
        "components",
        Value::Array(parts.iter().map(|c| complexes(c.values())).collect()),
    );
    r.set("component_norms", reals(&norms));
    r.set("linearity_defects", reals(&defects));
    Ok(r)
}

pub fn check_linear(p: &Problem, tol: f64) -> Result<Report, Failure> {
    let f = p.complex_function()?;
    let found = is_g_linear(&p.gset, &f, tol)?;
    let mut r = Report::new("check-linear", tol);
    match found {
        Some(psi) => r.line(format!("G-LINEAR ({})", psi_name(psi))),
        None => r.line("NOT G-LINEAR"),
    }
    r.set("verdict", Value::Bool(found.is_some()));
    r.set("character", found.map_or(Value::Null, |k| Value::from(k as u64)));
    Ok(r)
}

pub fn check_bent(p: &Problem, tol: f64, criterion: CriterionArg) -> Result<Report, Failure> {
    let x = &p.gset;
    let f = p.complex_function()?;
    let d = GDual::build(x);
    let b = bent_report(x, &d, &f, tol)?;
    let verdict_of = |c: BentCriterion| match c {
        BentCriterion::Spectral => b.spectral,
        BentCriterion::Derivatives => b.derivatives,
        BentCriterion::Poinsot => b.poinsot,
    };
    let chosen = criterion.criteria();
    let verdicts: Vec<bool> = chosen.iter().map(|&c| verdict_of(c)).collect();
    let agree = verdicts.iter().all(|&v| v == verdicts[0]);

    let mut r = Report::new("check-bent", tol);
    let tail = format!(
        "{}; distance {}",
        energy_phrase(&b.energies, tol),
        fixed(b.distance)
    );
    if !agree {
        r.status = Status::Inconsistent;
        let parts: Vec<String> = chosen
            .iter()
            .map(|&c| format!("{}={}", criterion_name(c), verdict_of(c)))
            .collect();
        r.line(format!("INCONSISTENT ({}); {tail}", parts.join(", ")));
    } else {
        let word = if verdicts[0] { "BENT" } else { "NOT BENT" };
        let how = if chosen.len() > 1 {
            "all criteria agree".to_string()
        } else {
            criterion_name(chosen[0]).to_string()
        };
        r.line(format!("{word} ({how}); {tail}"));
    }
    let sums: Vec<String> = b
        .derivative_sums
        .iter()
        .skip(1)
        .map(|&z| complex_text(z))
        .collect();
    r.line(format!("nontrivial derivative sums: {}", sums.join(", ")));
    r.line(format!("distance bound: {}", fixed(b.distance_bound)));

    r.set(
        "verdict",
        if agree {
            Value::Bool(verdicts[0])
        } else {
            Value::Null
        },
    );
    let mut criteria = Map::new();
    for &c in &chosen {
        criteria.insert(criterion_name(c).into(), Value::Bool(verdict_of(c)));
    }
    r.set("criteria", Value::Object(criteria));
    r.set("consistent", Value::Bool(agree));
    r.set("energies", reals(&b.energies));
    r.set("derivative_sums", complexes(&b.derivative_sums));
    r.set("poinsot_values", reals(&b.poinsot_values));
    r.set("distance", real(b.distance));
    r.set("distance_bound", real(b.distance_bound));
    Ok(r)
}

fn describe_counts(g: &FiniteAbelianGroup, counts: &[Vec<usize>]) -> String {
    let nontrivial = &counts[1..];
    if nontrivial.is_empty() {
        return "no nontrivial directions".into();
    }
    if nontrivial.iter().all(|c| c == &nontrivial[0]) {
        return format!(
            "derivative distribution {} for each nontrivial direction",
            join(&nontrivial[0], ",")
        );
    }
    let parts: Vec<String> = nontrivial
        .iter()
        .enumerate()
        .map(|(i, c)| format!("{}: {}", element_name(g, i + 1), join(c, ",")))
        .collect();
    format!("derivative distributions {}", parts.join("; "))
}

pub fn check_pnl(p: &Problem, tol: f64, mode: ModeArg) -> Result<Report, Failure> {
    let x = &p.gset;
    let (h, residues) = p.group_valued()?;
    let f = GroupValuedFunction::from_residues(x, h.clone(), &residues)?;
    let d = GDual::build(x);
    let counts = derivative_counts(&f);

    let mut r = Report::new("check-pnl", tol);
    let mut verdicts = Map::new();
    let mut results = Vec::new();
    for m in mode.modes() {
        let v = match m {
            PnlMode::Direct => is_pnl_direct(&f),
            PnlMode::ViaBent => is_pnl_via_bent(&f, &d, tol)?,
        };
        verdicts.insert(mode_name(m).into(), Value::Bool(v));
        results.push((m, v));
    }
    let agree = results.iter().all(|&(_, v)| v == results[0].1);
    let distribution = describe_counts(x.group(), &counts);
    if agree {
        let word = if results[0].1 {
            "G-PERFECT NONLINEAR"
        } else {
            "NOT G-PERFECT NONLINEAR"
        };
        r.line(format!("{word}; {distribution}"));
    } else {
        r.status = Status::Inconsistent;
        let parts: Vec<String> = results
            .iter()
            .map(|&(m, v)| format!("{}={v}", mode_name(m)))
            .collect();
        r.line(format!("INCONSISTENT ({}); {distribution}", parts.join(", ")));
    }

    let mut energies = Vec::new();
    for xi in h.elements().skip(1) {
        let e = spectral_energy_by_psi(&f.compose_character(xi), &d)?;
        r.line(format!("ξ{} ∘ g: {}", xi + 1, energy_phrase(&e, tol)));
        energies.push(reals(&e));
    }

    r.set(
        "verdict",
        if agree {
            Value::Bool(results[0].1)
        } else {
            Value::Null
        },
    );
    r.set("modes", Value::Object(verdicts));
    r.set("consistent", Value::Bool(agree));
    r.set(
        "derivative_counts",
        Value::Array(counts.iter().map(|c| usizes(c)).collect()),
    );
    r.set("energies", Value::Array(energies));
    r.set("codomain", usizes(h.invariants()));
    Ok(r)
}

pub fn search_bent(
    p: &Problem,
    tol: f64,
    q: Option<usize>,
    criterion: CriterionArg,
) -> Result<Report, Failure> {
    let x = &p.gset;
    let q = match (q, &p.function) {
        (Some(q), _) => q,
        (None, Some(crate::problem::FunctionSpec::RootsOfUnity { order, .. })) => *order,
        _ => {
            return Err(Failure::Input(
                "search-bent needs --q or a roots_of_unity function".into(),
            ))
        }
    };
    let total = candidate_count(q, x.points())?;
    let d = GDual::build(x);
    let chosen = criterion.criteria();
    let mut lists = Vec::new();
    for &c in &chosen {
        lists.push(search_bent_with(x, &d, q, c, tol)?);
    }
    let agree = lists.iter().all(|l| l == &lists[0]);

    let mut r = Report::new("search-bent", tol);
    let noun = if lists[0].len() == 1 {
        "function"
    } else {
        "functions"
    };
    if agree {
        r.line(format!("{} bent {noun} among {total} candidates", lists[0].len()));
    } else {
        r.status = Status::Inconsistent;
        let parts: Vec<String> = chosen
            .iter()
            .zip(&lists)
            .map(|(&c, l)| format!("{}={}", criterion_name(c), l.len()))
            .collect();
        r.line(format!(
            "INCONSISTENT ({}) among {total} candidates",
            parts.join(", ")
        ));
    }
    for e in &lists[0] {
        r.line(format!("exponents {}", join(e, ",")));
    }
    let mut by = Map::new();
    for (&c, l) in chosen.iter().zip(&lists) {
        by.insert(criterion_name(c).into(), Value::from(l.len() as u64));
    }
    r.set("verdict", Value::Bool(!lists[0].is_empty()));
    r.set("consistent", Value::Bool(agree));
    r.set("q", Value::from(q as u64));
    r.set("candidates", Value::from(total));
    r.set("counts", Value::Object(by));
    r.set(
        "results",
        Value::Array(lists[0].iter().map(|e| integers(e)).collect()),
    );
    Ok(r)
}

pub fn search_pnl(
    p: &Problem,
    tol: f64,
    codomain: Option<Vec<usize>>,
    mode: ModeArg,
) -> Result<Report, Failure> {
    let x = &p.gset;
    let h = match (codomain, &p.function) {
        (Some(c), _) => FiniteAbelianGroup::new(&c)?,
        (None, Some(crate::problem::FunctionSpec::GroupValued { .. })) => p.group_valued()?.0,
        _ => {
            return Err(Failure::Input(
                "search-pnl needs --codomain or a group_valued function".into(),
            ))
        }
    };
    let total = candidate_count(h.order(), x.points())?;
    let d = GDual::build(x);
    let modes = mode.modes();
    let mut lists: Vec<Vec<Vec<usize>>> = Vec::new();
    for &m in &modes {
        let found = search_pnl_with(x, &d, &h, m, tol)?;
        lists.push(found.iter().map(|f| f.values().to_vec()).collect());
    }
    let agree = lists.iter().all(|l| l == &lists[0]);

    let mut r = Report::new("search-pnl", tol);
    let noun = if lists[0].len() == 1 {
        "function"
    } else {
        "functions"
    };
    if agree {
        r.line(format!(
            "{} G-perfect nonlinear {noun} among {total} candidates",
            lists[0].len()
        ));
    } else {
        r.status = Status::Inconsistent;
        let parts: Vec<String> = modes
            .iter()
            .zip(&lists)
            .map(|(&m, l)| format!("{}={}", mode_name(m), l.len()))
            .collect();
        r.line(format!(
            "INCONSISTENT ({}) among {total} candidates",
            parts.join(", ")
        ));
    }
    for values in &lists[0] {
        let names: Vec<String> = values.iter().map(|&v| element_name(&h, v)).collect();
        r.line(format!("values {}", names.join(" ")));
    }
    let mut by = Map::new();
    for (&m, l) in modes.iter().zip(&lists) {
        by.insert(mode_name(m).into(), Value::from(l.len() as u64));
    }
    r.set("verdict", Value::Bool(!lists[0].is_empty()));
    r.set("consistent", Value::Bool(agree));
    r.set("codomain", usizes(h.invariants()));
    r.set("candidates", Value::from(total));
    r.set("counts", Value::Object(by));
    r.set(
        "results",
        Value::Array(
            lists[0]
                .iter()
                .map(|vals| Value::Array(vals.iter().map(|&v| element(&h, v)).collect()))
                .collect(),
        ),
    );
    Ok(r)
}

pub fn verify(p: &Problem, tol: f64) -> Result<Report, Failure> {
    let x = &p.gset;
    let n = x.points();
    let d = GDual::build(x);
    let v = verify_gdual(x, &d, tol);
    let ok = v.passed(n);
    let mut r = Report::new("verify", tol);
    if !ok {
        r.status = Status::Inconsistent;
    }
    r.line(format!(
        "{}; max deviation {:.3e} (bound {:.3e})",
        if ok { "G-DUAL VERIFIED" } else { "G-DUAL FAILED" },
        v.max_deviation(),
        tol * n.max(1) as f64
    ));
    r.line(format!(
        "row orthogonality {:.3e}; column orthogonality {:.3e}; linearity {:.3e}; conjugation {:.3e}",
        v.row_orthogonality, v.column_orthogonality, v.linearity, v.conjugation
    ));
    let mut checks = Map::new();
    checks.insert("row_orthogonality".into(), real(v.row_orthogonality));
    checks.insert("column_orthogonality".into(), real(v.column_orthogonality));
    checks.insert("linearity".into(), real(v.linearity));
    checks.insert("conjugation".into(), real(v.conjugation));
    checks.insert("complete".into(), Value::Bool(v.complete));
    r.set("verdict", Value::Bool(ok));
    r.set("deviations", Value::Object(checks));
    r.set("gdual", gdual_value(&d));
    r.set("psi", psi_labels(&d));
    Ok(r)
}
