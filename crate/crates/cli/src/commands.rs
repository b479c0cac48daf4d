use std::fmt::Write as _;

use polish_logic::classical::{self, Assignment2, TruthValue2};
use polish_logic::trivalent::{self, Assignment3, Semantics3, TruthValue3};
use polish_logic::vector::{self, BasisMode, Connective, VectorLogic};
use polish_logic::{
    make_basis, parse_str, AssignmentVec, EvalError, Exec, Formula, OperatorTable, ParseError,
};
use serde_json::{json, Value};

use crate::args::{
    BasisArgs, CheckArgs, CheckMode, DiffArgs, EvalArgs, Logic, MatricesArgs, Pair, ParseArgs,
    SymbolChoice, TableArgs,
};
use crate::render::{format_g17, format_machine, format_text, CsvTable, OutputRecord, Report};

/// `diff` refuses formulas with more variables than this.
const DIFF_MAX_VARIABLES: usize = 6;

const DEFAULT_GRID: [f64; 3] = [1.0, 0.5, 0.0];

/// Anything that should end the run with the usage exit status.
#[derive(Debug)]
pub struct CliError(pub String);

impl From<EvalError> for CliError {
    fn from(e: EvalError) -> Self {
        CliError(e.to_string())
    }
}

fn formula_of(expr: &str) -> Result<Formula, CliError> {
    parse_str(expr, &OperatorTable::standard())
        .map_err(|e| CliError(format!("{}\n{}", e, caret(expr, e.position))))
}

/// The input with a caret under character `position`.
fn caret(expr: &str, position: usize) -> String {
    format!("  {expr}\n  {}^", " ".repeat(position))
}

fn row_csv(values: impl IntoIterator<Item = String>) -> Vec<String> {
    values.into_iter().collect()
}

fn header(variables: &[char], extra: &[&str]) -> Vec<String> {
    variables
        .iter()
        .map(char::to_string)
        .chain(extra.iter().map(|s| s.to_string()))
        .collect()
}

fn text_table(variables: &[char], value_header: &str, rows: &[(Vec<String>, String)]) -> String {
    let mut out = String::new();
    let names: Vec<String> = variables.iter().map(char::to_string).collect();
    let _ = writeln!(out, "{} | {value_header}", names.join(" "));
    for (inputs, value) in rows {
        let _ = writeln!(out, "{} | {value}", inputs.join(" "));
    }
    out
}

// ---------------------------------------------------------------- parse

fn operator_table(ops: Option<&str>) -> Result<OperatorTable, CliError> {
    let mut table = OperatorTable::standard();
    let Some(ops) = ops else {
        return Ok(table);
    };
    for entry in ops.split(',').map(str::trim).filter(|e| !e.is_empty()) {
        let mut chars = entry.chars();
        let (Some(symbol), Some(':')) = (chars.next(), chars.next()) else {
            return Err(CliError(format!(
                "bad operator entry {entry:?}; expected symbol:arity"
            )));
        };
        let arity: usize = chars
            .as_str()
            .parse()
            .map_err(|_| CliError(format!("bad arity in {entry:?}")))?;
        table
            .insert(symbol, arity)
            .map_err(|e| CliError(e.to_string()))?;
    }
    Ok(table)
}

fn tree_json(formula: &Formula) -> Value {
    match formula {
        Formula::Atom(name) => json!({ "atom": name.to_string() }),
        Formula::Const(value) => json!({ "const": u8::from(*value) }),
        Formula::Op(symbol, children) => json!({
            "op": symbol.to_string(),
            "children": children.iter().map(tree_json).collect::<Vec<_>>(),
        }),
    }
}

fn tree_text(formula: &Formula, indent: usize, out: &mut String) {
    let label = match formula {
        Formula::Op(symbol, _) => symbol.to_string(),
        leaf => leaf.to_polish(),
    };
    let _ = writeln!(out, "{}{label}", "  ".repeat(indent));
    if let Formula::Op(_, children) = formula {
        for child in children {
            tree_text(child, indent + 1, out);
        }
    }
}

fn error_json(e: &ParseError) -> Value {
    let kind = format!("{:?}", e.kind);
    json!({ "kind": kind, "position": e.position })
}

pub fn parse(args: &ParseArgs) -> Result<Report, CliError> {
    let table = operator_table(args.ops.as_deref())?;
    let header = row_csv(
        [
            "valid",
            "polish",
            "infix",
            "variables",
            "error_kind",
            "error_position",
        ]
        .map(String::from),
    );
    let report = match parse_str(&args.expr, &table) {
        Ok(formula) => {
            let polish = formula.to_polish();
            let infix = formula.to_infix();
            let variables: Vec<String> = formula
                .free_variables()
                .iter()
                .map(char::to_string)
                .collect();
            let mut text = format!(
                "valid\npolish: {polish}\ninfix: {infix}\nvariables: {}\ntree:\n",
                variables.join(" ")
            );
            tree_text(&formula, 1, &mut text);
            Report {
                record: OutputRecord {
                    command: "parse",
                    formula: Some(args.expr.clone()),
                    semantics: None,
                    results: json!({
                        "valid": true,
                        "polish": polish,
                        "infix": infix,
                        "variables": variables,
                        "tree": tree_json(&formula),
                    }),
                },
                csv: CsvTable {
                    header,
                    rows: vec![vec![
                        "true".into(),
                        polish,
                        infix,
                        variables.join(" "),
                        String::new(),
                        String::new(),
                    ]],
                },
                text,
                exit_code: 0,
            }
        }
        Err(e) => Report {
            record: OutputRecord {
                command: "parse",
                formula: Some(args.expr.clone()),
                semantics: None,
                results: json!({ "valid": false, "error": error_json(&e) }),
            },
            csv: CsvTable {
                header,
                rows: vec![vec![
                    "false".into(),
                    String::new(),
                    String::new(),
                    String::new(),
                    format!("{:?}", e.kind),
                    e.position.to_string(),
                ]],
            },
            text: format!(
                "invalid: {:?}: {e}\n{}\n",
                e.kind,
                caret(&args.expr, e.position)
            ),
            exit_code: 2,
        },
    };
    Ok(report)
}

// ---------------------------------------------------------------- shared

fn basis_mode(spec: &str) -> Result<BasisMode, CliError> {
    match spec.split_once(':') {
        None if spec == "canonical" => Ok(BasisMode::Canonical),
        None if spec == "random" => Err(CliError(
            "a random basis needs an explicit seed, e.g. --basis random:7".into(),
        )),
        Some(("random", seed)) => seed
            .parse()
            .map(|seed| BasisMode::Random { seed })
            .map_err(|_| CliError(format!("bad seed {seed:?} in --basis"))),
        _ => Err(CliError(format!(
            "unknown basis {spec:?}; use canonical or random:<seed>"
        ))),
    }
}

fn engine(args: &BasisArgs) -> Result<VectorLogic, CliError> {
    let mode = basis_mode(&args.basis)?;
    Ok(VectorLogic::new(make_basis(args.dim, mode)?))
}

fn parse_weight(raw: &str) -> Result<f64, CliError> {
    let raw = raw.trim();
    if raw == "½" {
        return Ok(0.5);
    }
    raw.parse()
        .map_err(|_| CliError(format!("{raw:?} is not a number")))
}

fn parse_assignment(spec: &str) -> Result<Vec<(char, f64)>, CliError> {
    let mut pairs: Vec<(char, f64)> = Vec::new();
    for entry in spec.split(',').map(str::trim).filter(|e| !e.is_empty()) {
        let Some((name, value)) = entry.split_once('=') else {
            return Err(CliError(format!(
                "bad assignment {entry:?}; expected name=value"
            )));
        };
        let mut chars = name.trim().chars();
        let (Some(name), None) = (chars.next(), chars.next()) else {
            return Err(CliError(format!(
                "variable names are single letters, got {name:?}"
            )));
        };
        if !name.is_ascii_lowercase() {
            return Err(CliError(format!(
                "variable names are lowercase letters, got {name:?}"
            )));
        }
        if pairs.iter().any(|(n, _)| *n == name) {
            return Err(CliError(format!("variable {name} assigned twice")));
        }
        pairs.push((name, parse_weight(value)?));
    }
    Ok(pairs)
}

fn parse_grid(spec: Option<&str>) -> Result<Vec<f64>, CliError> {
    match spec {
        None => Ok(DEFAULT_GRID.to_vec()),
        Some(spec) => spec
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(parse_weight)
            .collect(),
    }
}

fn assignment_text<V: Copy>(
    variables: &[char],
    values: &[V],
    show: impl Fn(V) -> String,
) -> String {
    variables
        .iter()
        .zip(values)
        .map(|(n, &v)| format!("{n}={}", show(v)))
        .collect::<Vec<_>>()
        .join(",")
}

// ---------------------------------------------------------------- table

struct Rows {
    variables: Vec<char>,
    inputs: Vec<Vec<f64>>,
    values: Vec<f64>,
    vectors: Option<Vec<Vec<f64>>>,
}

pub fn table(args: &TableArgs) -> Result<Report, CliError> {
    let formula = formula_of(&args.expr)?;
    if args.grid.is_some() && !matches!(args.logic, Logic::Matrix | Logic::Projection) {
        return Err(CliError(
            "--grid applies to matrix and projection tables only".into(),
        ));
    }
    let rows = match args.logic {
        Logic::Classical => {
            let t = classical::truth_table(&formula)?;
            Rows {
                inputs: t
                    .rows
                    .iter()
                    .map(|r| r.inputs.iter().map(|v| v.as_f64()).collect())
                    .collect(),
                values: t.column().map(TruthValue2::as_f64).collect(),
                variables: t.variables,
                vectors: None,
            }
        }
        Logic::Lukasiewicz | Logic::Kleene => {
            let semantics = if args.logic == Logic::Kleene {
                Semantics3::Kleene
            } else {
                Semantics3::Lukasiewicz
            };
            let t = trivalent::trivalent_table(&formula, semantics)?;
            Rows {
                inputs: t
                    .rows
                    .iter()
                    .map(|r| r.inputs.iter().map(|v| v.as_f64()).collect())
                    .collect(),
                values: t.column().map(TruthValue3::as_f64).collect(),
                variables: t.variables,
                vectors: None,
            }
        }
        Logic::Matrix => {
            let grid = parse_grid(args.grid.as_deref())?;
            let t = engine(&args.basis)?.grid_table(&formula, &grid, Exec::default())?;
            Rows {
                inputs: t.rows.iter().map(|r| r.inputs.clone()).collect(),
                values: t.rows.iter().map(|r| r.weight).collect(),
                vectors: Some(
                    t.rows
                        .iter()
                        .map(|r| r.vector.components().iter().copied().collect())
                        .collect(),
                ),
                variables: t.variables,
            }
        }
        Logic::Projection => {
            let grid = parse_grid(args.grid.as_deref())?;
            projection_rows(&formula, &grid)?
        }
    };

    let text_rows: Vec<(Vec<String>, String)> = rows
        .inputs
        .iter()
        .zip(&rows.values)
        .map(|(inputs, &v)| {
            (
                inputs.iter().map(|&x| format_text(x)).collect(),
                format_text(v),
            )
        })
        .collect();
    let text = text_table(&rows.variables, &args.expr, &text_rows);

    let csv_rows = rows
        .inputs
        .iter()
        .zip(&rows.values)
        .map(|(inputs, &v)| {
            inputs
                .iter()
                .map(|&x| format_machine(x))
                .chain([format_machine(v)])
                .collect()
        })
        .collect();

    let json_rows: Vec<Value> = rows
        .inputs
        .iter()
        .zip(&rows.values)
        .enumerate()
        .map(|(i, (inputs, &value))| {
            let mut row = json!({ "inputs": inputs, "value": value });
            if let Some(vectors) = &rows.vectors {
                row["vector"] = json!(vectors[i]);
            }
            row
        })
        .collect();
    let variables: Vec<String> = rows.variables.iter().map(char::to_string).collect();

    Ok(Report {
        record: OutputRecord {
            command: "table",
            formula: Some(args.expr.clone()),
            semantics: Some(args.logic.label().into()),
            results: json!({ "variables": variables, "rows": json_rows }),
        },
        text,
        csv: CsvTable {
            header: header(&rows.variables, &["value"]),
            rows: csv_rows,
        },
        exit_code: 0,
    })
}

fn projection_rows(formula: &Formula, grid: &[f64]) -> Result<Rows, CliError> {
    let variables = formula.free_variables();
    if variables.len() > vector::MAX_GRID_VARIABLES {
        return Err(EvalError::TooManyVariables {
            found: variables.len(),
            limit: vector::MAX_GRID_VARIABLES,
        }
        .into());
    }
    let count = grid.len().pow(variables.len() as u32);
    let evaluated = Exec::default().try_map(count, |index| {
        let mut rest = index;
        let mut inputs = vec![0.0; variables.len()];
        for slot in inputs.iter_mut().rev() {
            *slot = grid[rest % grid.len()];
            rest /= grid.len();
        }
        let assignment: AssignmentVec = variables
            .iter()
            .copied()
            .zip(inputs.iter().copied())
            .collect();
        vector::eval_projection(formula, &assignment).map(|v| (inputs, v))
    })?;
    let (inputs, values) = evaluated.into_iter().unzip();
    Ok(Rows {
        variables,
        inputs,
        values,
        vectors: None,
    })
}

// ---------------------------------------------------------------- check

pub fn check(args: &CheckArgs) -> Result<Report, CliError> {
    let formula = formula_of(&args.expr)?;
    let (verdict_true, verdict_false, counterexample, other) = match (args.mode, &args.other) {
        (CheckMode::Tautology, None) => (
            "TAUTOLOGY",
            "NOT TAUTOLOGY",
            classical::tautology_counterexample(&formula)?,
            None,
        ),
        (CheckMode::Tautology, Some(_)) => {
            return Err(CliError(
                "a second formula is only used with --mode equiv".into(),
            ))
        }
        (CheckMode::Equiv, Some(other)) => {
            let g = formula_of(other)?;
            (
                "EQUIVALENT",
                "NOT EQUIVALENT",
                classical::equivalence_counterexample(&formula, &g)?,
                Some(other.clone()),
            )
        }
        (CheckMode::Equiv, None) => {
            return Err(CliError("--mode equiv needs a second formula".into()))
        }
    };

    let holds = counterexample.is_none();
    let verdict = if holds { verdict_true } else { verdict_false };
    let pairs: Vec<(char, TruthValue2)> = counterexample
        .as_ref()
        .map(|a: &Assignment2| a.iter().collect())
        .unwrap_or_default();
    // Assignment iterates alphabetically; report in formula order instead.
    let order = match &other {
        Some(other) => classical::union_variables(&formula, &formula_of(other)?),
        None => formula.free_variables(),
    };
    let ordered: Vec<(char, TruthValue2)> = order
        .iter()
        .filter_map(|n| pairs.iter().find(|(m, _)| m == n).copied())
        .collect();
    let names: Vec<char> = ordered.iter().map(|(n, _)| *n).collect();
    let values: Vec<TruthValue2> = ordered.iter().map(|(_, v)| *v).collect();
    let witness = assignment_text(&names, &values, |v| v.to_string());

    let mut text = format!("{verdict}\n");
    if !holds {
        let _ = writeln!(text, "counterexample: {witness}");
    }
    let counter_json = if holds {
        Value::Null
    } else {
        Value::Object(
            ordered
                .iter()
                .map(|(n, v)| (n.to_string(), json!(v.as_f64())))
                .collect(),
        )
    };
    let mut results = json!({
        "verdict": verdict,
        "holds": holds,
        "counterexample": counter_json,
    });
    if let Some(other) = &other {
        results["other"] = json!(other);
    }
    Ok(Report {
        record: OutputRecord {
            command: "check",
            formula: Some(args.expr.clone()),
            semantics: Some("classical".into()),
            results,
        },
        text,
        csv: CsvTable {
            header: row_csv(["verdict", "holds", "counterexample"].map(String::from)),
            rows: vec![vec![verdict.into(), holds.to_string(), witness]],
        },
        exit_code: if holds { 0 } else { 1 },
    })
}

// ---------------------------------------------------------------- eval

pub fn eval(args: &EvalArgs) -> Result<Report, CliError> {
    let formula = formula_of(&args.expr)?;
    let pairs = parse_assignment(&args.assign)?;

    let (text, results, csv) = match args.logic {
        Logic::Classical => {
            let mut assignment = Assignment2::new();
            for &(name, x) in &pairs {
                let v = if x == 0.0 {
                    TruthValue2::Zero
                } else if x == 1.0 {
                    TruthValue2::One
                } else {
                    return Err(EvalError::InvalidValue(x).into());
                };
                assignment.insert(name, v);
            }
            let value = classical::eval2(&formula, &assignment)?;
            scalar_output(value.to_string(), value.as_f64())
        }
        Logic::Lukasiewicz | Logic::Kleene => {
            let semantics = if args.logic == Logic::Kleene {
                Semantics3::Kleene
            } else {
                Semantics3::Lukasiewicz
            };
            let mut assignment = Assignment3::new();
            for &(name, x) in &pairs {
                assignment.insert(name, TruthValue3::from_f64(x)?);
            }
            let value = trivalent::eval3(&formula, &assignment, semantics)?;
            scalar_output(value.to_string(), value.as_f64())
        }
        Logic::Projection => {
            let assignment: AssignmentVec = pairs.iter().copied().collect();
            let value = vector::eval_projection(&formula, &assignment)?;
            scalar_output(format_text(value), value)
        }
        Logic::Matrix => {
            let logic = engine(&args.basis)?;
            let assignment: AssignmentVec = pairs.iter().copied().collect();
            let v = logic.eval(&formula, &assignment)?;
            let weight = logic.basis().decode(&v)?;
            let components: Vec<f64> = v.components().iter().copied().collect();
            let shown: Vec<String> = components.iter().map(|&x| format_g17(x)).collect();
            let text = format!(
                "vector: {}\nweight: {}\n",
                shown.join(" "),
                format_text(weight)
            );
            let header = std::iter::once("weight".to_string())
                .chain((0..components.len()).map(|i| format!("v{i}")))
                .collect();
            let row = std::iter::once(format_machine(weight))
                .chain(components.iter().map(|&x| format_machine(x)))
                .collect();
            (
                text,
                json!({ "vector": components, "weight": weight, "dim": args.basis.dim, "basis": args.basis.basis }),
                CsvTable {
                    header,
                    rows: vec![row],
                },
            )
        }
    };

    Ok(Report {
        record: OutputRecord {
            command: "eval",
            formula: Some(args.expr.clone()),
            semantics: Some(args.logic.label().into()),
            results,
        },
        text,
        csv,
        exit_code: 0,
    })
}

fn scalar_output(text: String, value: f64) -> (String, Value, CsvTable) {
    (
        format!("{text}\n"),
        json!({ "value": value }),
        CsvTable {
            header: vec!["value".into()],
            rows: vec![vec![format_machine(value)]],
        },
    )
}

// ---------------------------------------------------------------- diff

struct DiffRow {
    inputs: Vec<TruthValue3>,
    left: f64,
    right: f64,
    printed: Option<f64>,
}

/// Cells of a bare connective applied to distinct variables inherit the
/// printed-value annotations of the connective-level comparison.
fn bare_connective(formula: &Formula) -> Option<Connective> {
    let Formula::Op(symbol, children) = formula else {
        return None;
    };
    let connective = Connective::from_symbol(*symbol)?;
    let mut names = Vec::new();
    for child in children {
        match child {
            Formula::Atom(n) if !names.contains(n) => names.push(*n),
            _ => return None,
        }
    }
    Some(connective)
}

pub fn diff(args: &DiffArgs) -> Result<Report, CliError> {
    let formula = formula_of(&args.expr)?;
    let variables = formula.free_variables();
    if variables.len() > DIFF_MAX_VARIABLES {
        return Err(EvalError::TooManyVariables {
            found: variables.len(),
            limit: DIFF_MAX_VARIABLES,
        }
        .into());
    }
    let (left_name, right_name) = match args.pair {
        Pair::LukKleene => ("lukasiewicz", "kleene"),
        Pair::LukMatrix => ("lukasiewicz", "matrix"),
    };

    let rows: Vec<DiffRow> = match args.pair {
        Pair::LukKleene => trivalent::diff_semantics(&formula)?
            .disagreements
            .into_iter()
            .map(|d| DiffRow {
                inputs: d.inputs,
                left: d.lukasiewicz.as_f64(),
                right: d.kleene.as_f64(),
                printed: None,
            })
            .collect(),
        Pair::LukMatrix => {
            let luk = trivalent::trivalent_table(&formula, Semantics3::Lukasiewicz)?;
            let annotations = bare_connective(&formula)
                .map(vector::compare_with_lukasiewicz)
                .unwrap_or_default();
            let mut out = Vec::new();
            for row in luk.rows {
                let assignment: AssignmentVec = variables
                    .iter()
                    .copied()
                    .zip(row.inputs.iter().map(|v| v.as_f64()))
                    .collect();
                let projected = vector::eval_projection(&formula, &assignment)?;
                if (projected - row.value.as_f64()).abs() > vector::BASIS_TOLERANCE {
                    let printed = annotations
                        .iter()
                        .find(|a| a.inputs == row.inputs)
                        .and_then(|a| a.printed_projection);
                    out.push(DiffRow {
                        inputs: row.inputs,
                        left: row.value.as_f64(),
                        right: projected,
                        printed,
                    });
                }
            }
            out
        }
    };

    let mut text = String::new();
    if rows.is_empty() {
        text.push_str("no disagreements\n");
    } else {
        let text_rows: Vec<(Vec<String>, String)> = rows
            .iter()
            .map(|r| {
                let mut value = format!("{} {}", format_text(r.left), format_text(r.right));
                if let Some(p) = r.printed {
                    let _ = write!(value, " (known misprint: {})", format_text(p));
                }
                (r.inputs.iter().map(|v| v.to_string()).collect(), value)
            })
            .collect();
        text = text_table(&variables, &format!("{left_name} {right_name}"), &text_rows);
    }

    let json_rows: Vec<Value> = rows
        .iter()
        .map(|r| {
            let mut row = json!({
                "inputs": r.inputs.iter().map(|v| v.as_f64()).collect::<Vec<_>>(),
                left_name: r.left,
                right_name: r.right,
            });
            if let Some(p) = r.printed {
                row["printed_value"] = json!(p);
            }
            row
        })
        .collect();
    let csv_rows = rows
        .iter()
        .map(|r| {
            r.inputs
                .iter()
                .map(|v| format_machine(v.as_f64()))
                .chain([format_machine(r.left), format_machine(r.right)])
                .collect()
        })
        .collect();
    let names: Vec<String> = variables.iter().map(char::to_string).collect();

    Ok(Report {
        record: OutputRecord {
            command: "diff",
            formula: Some(args.expr.clone()),
            semantics: Some(format!("{left_name}-{right_name}")),
            results: json!({ "variables": names, "rows": json_rows }),
        },
        text,
        csv: CsvTable {
            header: header(&variables, &[left_name, right_name]),
            rows: csv_rows,
        },
        exit_code: 0,
    })
}

// ---------------------------------------------------------------- matrices

pub fn matrices(args: &MatricesArgs) -> Result<Report, CliError> {
    let logic = engine(&args.basis)?;
    let chosen: Vec<Connective> = match args.symbol {
        SymbolChoice::N => vec![Connective::N],
        SymbolChoice::C => vec![Connective::C],
        SymbolChoice::K => vec![Connective::K],
        SymbolChoice::A => vec![Connective::A],
        SymbolChoice::All => Connective::ALL.to_vec(),
    };

    let mut text = String::new();
    let mut json_matrices = Vec::new();
    let mut csv_rows = Vec::new();
    for (i, &connective) in chosen.iter().enumerate() {
        let m = logic.matrix(connective).matrix();
        let symbol = connective.symbol().to_string();
        if chosen.len() > 1 {
            if i > 0 {
                text.push('\n');
            }
            let _ = writeln!(text, "# {symbol} {}x{}", m.nrows(), m.ncols());
        }
        let mut data = Vec::new();
        for r in 0..m.nrows() {
            let row: Vec<f64> = m.row(r).iter().copied().collect();
            let shown: Vec<String> = row.iter().map(|&x| format_g17(x)).collect();
            let _ = writeln!(text, "{}", shown.join(" "));
            for (c, &x) in row.iter().enumerate() {
                csv_rows.push(vec![
                    symbol.clone(),
                    r.to_string(),
                    c.to_string(),
                    format_machine(x),
                ]);
            }
            data.push(row);
        }
        json_matrices.push(json!({
            "symbol": symbol,
            "rows": m.nrows(),
            "cols": m.ncols(),
            "data": data,
        }));
    }

    Ok(Report {
        record: OutputRecord {
            command: "matrices",
            formula: None,
            semantics: Some("matrix".into()),
            results: json!({
                "dim": args.basis.dim,
                "basis": args.basis.basis,
                "matrices": json_matrices,
            }),
        },
        text,
        csv: CsvTable {
            header: row_csv(["symbol", "row", "col", "value"].map(String::from)),
            rows: csv_rows,
        },
        exit_code: 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_specs() {
        assert_eq!(basis_mode("canonical").unwrap(), BasisMode::Canonical);
        assert_eq!(
            basis_mode("random:7").unwrap(),
            BasisMode::Random { seed: 7 }
        );
        assert!(basis_mode("random").is_err());
        assert!(basis_mode("random:x").is_err());
        assert!(basis_mode("gaussian").is_err());
    }

    #[test]
    fn assignments() {
        assert_eq!(
            parse_assignment("p=0.5, q=1").unwrap(),
            vec![('p', 0.5), ('q', 1.0)]
        );
        assert_eq!(parse_assignment("p=½").unwrap(), vec![('p', 0.5)]);
        assert!(parse_assignment("").unwrap().is_empty());
        assert!(parse_assignment("p").is_err());
        assert!(parse_assignment("P=1").is_err());
        assert!(parse_assignment("pq=1").is_err());
        assert!(parse_assignment("p=1,p=0").is_err());
        assert!(parse_assignment("p=yes").is_err());
    }

    #[test]
    fn operator_specs() {
        let t = operator_table(Some("+:2,-:1")).unwrap();
        assert_eq!(t.arity('+'), Some(2));
        assert_eq!(t.arity('-'), Some(1));
        assert!(operator_table(Some("+2")).is_err());
        assert!(operator_table(Some("p:2")).is_err());
    }

    #[test]
    fn bare_connectives() {
        let f = |s| formula_of(s).unwrap();
        assert_eq!(bare_connective(&f("Apq")), Some(Connective::A));
        assert_eq!(bare_connective(&f("App")), None);
        assert_eq!(bare_connective(&f("ApNq")), None);
    }
}
