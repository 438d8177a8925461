//! Problem files: a group, its action on a finite set, and optionally a
//! function on that set.

use std::collections::BTreeMap;
use std::fmt;

use gset_fourier::{Complex64, FiniteAbelianGroup, FunctionOnX, GSet};
use serde::Deserialize;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub group: Vec<usize>,
    pub action: ActionSpec,
    /// Kept raw so the `kind` tag can be dispatched without buffering numbers.
    #[serde(default)]
    pub function: Option<serde_json::Value>,
    #[serde(default)]
    pub tolerance: Option<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionSpec {
    pub points: usize,
    /// Image lists for the canonical generators `e1`..`ek`.
    #[serde(default)]
    pub generators: Option<BTreeMap<String, Permutation>>,
    /// Full table, one row per element in canonical order.
    #[serde(default)]
    pub table: Option<Vec<Permutation>>,
}

/// An image list, checked to be a permutation of `0..len` while parsing.
#[derive(Debug, Clone, Deserialize)]
#[serde(try_from = "Vec<usize>")]
pub struct Permutation(pub Vec<usize>);

impl TryFrom<Vec<usize>> for Permutation {
    type Error = String;

    fn try_from(images: Vec<usize>) -> Result<Self, String> {
        let mut seen = vec![false; images.len()];
        for &y in &images {
            if y >= images.len() || seen[y] {
                return Err(format!("{images:?} is not a permutation of 0..{}", images.len()));
            }
            seen[y] = true;
        }
        Ok(Permutation(images))
    }
}

#[derive(Debug, Clone)]
pub enum FunctionSpec {
    RootsOfUnity {
        order: usize,
        exponents: Vec<u32>,
    },
    Complex {
        values: Vec<(f64, f64)>,
    },
    GroupValued {
        codomain: Vec<usize>,
        values: Vec<Vec<usize>>,
    },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RootsOfUnity {
    #[allow(dead_code)]
    kind: String,
    order: usize,
    exponents: Vec<u32>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexValues {
    #[allow(dead_code)]
    kind: String,
    values: Vec<(serde_json::Number, serde_json::Number)>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupValued {
    #[allow(dead_code)]
    kind: String,
    codomain: Vec<usize>,
    values: Vec<Vec<usize>>,
}

impl FunctionSpec {
    fn from_value(value: serde_json::Value) -> Result<FunctionSpec, String> {
        let kind = value
            .get("kind")
            .and_then(|k| k.as_str())
            .ok_or("function needs a string \"kind\"")?
            .to_string();
        let err = |e: serde_json::Error| format!("function: {e}");
        match kind.as_str() {
            "roots_of_unity" => {
                let r: RootsOfUnity = serde_json::from_value(value).map_err(err)?;
                Ok(FunctionSpec::RootsOfUnity {
                    order: r.order,
                    exponents: r.exponents,
                })
            }
            "complex" => {
                let c: ComplexValues = serde_json::from_value(value).map_err(err)?;
                let real = |n: &serde_json::Number| n.as_f64().filter(|v| v.is_finite());
                let values = c
                    .values
                    .iter()
                    .map(|(re, im)| match (real(re), real(im)) {
                        (Some(re), Some(im)) => Ok((re, im)),
                        _ => Err(format!("function: [{re}, {im}] is not a finite complex number")),
                    })
                    .collect::<Result<_, _>>()?;
                Ok(FunctionSpec::Complex { values })
            }
            "group_valued" => {
                let g: GroupValued = serde_json::from_value(value).map_err(err)?;
                Ok(FunctionSpec::GroupValued {
                    codomain: g.codomain,
                    values: g.values,
                })
            }
            other => Err(format!(
                "unknown function kind \"{other}\", expected roots_of_unity, complex or group_valued"
            )),
        }
    }
}

#[derive(Debug)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A validated problem.
#[derive(Debug)]
pub struct Problem {
    pub gset: GSet,
    pub function: Option<FunctionSpec>,
    pub tolerance: Option<f64>,
}

/// 1-based line of the first occurrence of `needle`.
fn line_of(source: &str, needle: &str) -> Option<usize> {
    source.lines().position(|l| l.contains(needle)).map(|i| i + 1)
}

fn at(source: &str, needle: &str, message: String) -> InputError {
    match line_of(source, needle) {
        Some(line) => InputError(format!("line {line}: {message}")),
        None => InputError(message),
    }
}

impl Problem {
    pub fn parse(source: &str) -> Result<Problem, InputError> {
        let file: ProblemFile = serde_json::from_str(source).map_err(|e| InputError(e.to_string()))?;
        let group =
            FiniteAbelianGroup::new(&file.group).map_err(|e| at(source, "\"group\"", e.to_string()))?;
        let n = file.action.points;
        let gset = match (&file.action.generators, &file.action.table) {
            (Some(generators), None) => {
                let mut perms = Vec::with_capacity(group.rank());
                for j in 1..=group.rank() {
                    let key = format!("e{j}");
                    let perm = generators.get(&key).ok_or_else(|| {
                        at(source, "\"generators\"", format!("missing generator \"{key}\""))
                    })?;
                    if perm.0.len() != n {
                        return Err(at(
                            source,
                            &format!("\"{key}\""),
                            format!("generator \"{key}\" has {} images, expected {n}", perm.0.len()),
                        ));
                    }
                    perms.push(perm.0.clone());
                }
                if let Some(extra) = generators.keys().find(|k| {
                    k.strip_prefix('e')
                        .and_then(|d| d.parse::<usize>().ok())
                        .is_none_or(|j| j == 0 || j > group.rank())
                }) {
                    return Err(at(
                        source,
                        &format!("\"{extra}\""),
                        format!(
                            "unknown generator \"{extra}\" for a group of rank {}",
                            group.rank()
                        ),
                    ));
                }
                GSet::from_generators(group, n, &perms)
                    .map_err(|e| at(source, "\"generators\"", e.to_string()))?
            }
            (None, Some(rows)) => {
                if rows.len() != group.order() {
                    return Err(at(
                        source,
                        "\"table\"",
                        format!("table has {} rows, expected {}", rows.len(), group.order()),
                    ));
                }
                let mut table = Vec::with_capacity(group.order() * n);
                for (i, row) in rows.iter().enumerate() {
                    if row.0.len() != n {
                        return Err(at(
                            source,
                            "\"table\"",
                            format!("table row {i} has {} entries, expected {n}", row.0.len()),
                        ));
                    }
                    table.extend_from_slice(&row.0);
                }
                GSet::from_table(group, n, table).map_err(|e| at(source, "\"table\"", e.to_string()))?
            }
            _ => {
                return Err(at(
                    source,
                    "\"action\"",
                    "action needs exactly one of \"generators\" or \"table\"".to_string(),
                ))
            }
        };

        let function = match file.function {
            Some(v) => Some(FunctionSpec::from_value(v).map_err(|e| at(source, "\"function\"", e))?),
            None => None,
        };
        if let Some(spec) = &function {
            let len = match spec {
                FunctionSpec::RootsOfUnity { order, exponents } => {
                    if *order == 0 {
                        return Err(at(source, "\"order\"", "root order must be at least 1".into()));
                    }
                    if let Some(e) = exponents.iter().find(|&&e| e as usize >= *order) {
                        return Err(at(
                            source,
                            "\"exponents\"",
                            format!("exponent {e} is not below the order {order}"),
                        ));
                    }
                    exponents.len()
                }
                FunctionSpec::Complex { values } => values.len(),
                FunctionSpec::GroupValued { codomain, values } => {
                    let h = FiniteAbelianGroup::new(codomain)
                        .map_err(|e| at(source, "\"codomain\"", e.to_string()))?;
                    for v in values {
                        h.index_of(v)
                            .map_err(|e| at(source, "\"values\"", e.to_string()))?;
                    }
                    values.len()
                }
            };
            if len != n {
                return Err(at(
                    source,
                    "\"function\"",
                    format!("function has {len} values, expected {n}"),
                ));
            }
        }
        if let Some(t) = file.tolerance {
            if !(t > 0.0 && t.is_finite()) {
                return Err(at(
                    source,
                    "\"tolerance\"",
                    format!("tolerance {t} must be positive"),
                ));
            }
        }
        Ok(Problem {
            gset,
            function,
            tolerance: file.tolerance,
        })
    }

    /// The function as a complex vector; group-valued functions are not.
    pub fn complex_function(&self) -> Result<FunctionOnX, InputError> {
        match &self.function {
            Some(FunctionSpec::RootsOfUnity { order, exponents }) => {
                Ok(FunctionOnX::from_exponents(exponents, *order).expect("order validated"))
            }
            Some(FunctionSpec::Complex { values }) => Ok(FunctionOnX::new(
                values.iter().map(|&(re, im)| Complex64::new(re, im)).collect(),
            )),
            Some(FunctionSpec::GroupValued { .. }) => Err(InputError(
                "this subcommand needs a complex or roots_of_unity function, not group_valued".into(),
            )),
            None => Err(InputError("this subcommand needs a \"function\" entry".into())),
        }
    }

    /// Codomain invariants and values (as residue tuples) of a group-valued function.
    pub fn group_valued(&self) -> Result<(FiniteAbelianGroup, Vec<Vec<usize>>), InputError> {
        match &self.function {
            Some(FunctionSpec::GroupValued { codomain, values }) => Ok((
                FiniteAbelianGroup::new(codomain).expect("codomain validated"),
                values.clone(),
            )),
            Some(_) => Err(InputError("this subcommand needs a group_valued function".into())),
            None => Err(InputError("this subcommand needs a \"function\" entry".into())),
        }
    }
}
