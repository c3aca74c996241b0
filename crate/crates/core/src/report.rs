//! Reports produced by the command-line front end, and their rendering as
//! TSV, JSON or Markdown.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bounds::{evaluate_all, reference_upper, BestBound, BoundCatalog, BoundId, BoundInputs};
use crate::error::{Error, Result};
use crate::exact::{
    decomposition_from_parts, effective_resistances, hitting_times, lovasz_from_parts,
    multiplicative_index_from_spectrum, rel_error, DecompositionReport, IndexValues, LovaszReport,
};
use crate::generators::{generate, FamilySpec};
use crate::graph::Graph;
use crate::spectral::transition_spectrum;

const PUBLISHED_TABLES: &str = include_str!("../data/published_tables.json");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Tsv,
    Json,
    Markdown,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "tsv" => Ok(Format::Tsv),
            "json" => Ok(Format::Json),
            "markdown" | "md" => Ok(Format::Markdown),
            other => Err(format!(
                "unknown format {other:?} (expected tsv, json or markdown)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub name: String,
    pub n: usize,
    pub m_edges: usize,
    /// `(degree, count)` pairs.
    pub degree_histogram: Vec<(usize, usize)>,
    pub diameter: usize,
    pub is_tree: bool,
    pub is_bipartite: bool,
    pub is_regular: bool,
    pub is_distance_regular: bool,
    /// `(N⁴ - N³ - N² + N)/3`, an earlier general upper bound.
    pub reference_upper: f64,
}

impl GraphSummary {
    pub fn new(name: impl Into<String>, g: &Graph) -> Self {
        GraphSummary {
            name: name.into(),
            n: g.n(),
            m_edges: g.edge_count(),
            degree_histogram: g.degree_sequence().histogram(),
            diameter: g.diameter(),
            is_tree: g.is_tree(),
            is_bipartite: g.is_bipartite(),
            is_regular: g.is_regular(),
            is_distance_regular: g.is_distance_regular(),
            reference_upper: reference_upper(g.n()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verification {
    pub tolerance: f64,
    pub decomposition: DecompositionReport,
    pub lovasz: LovaszReport,
    pub commute_max_rel_error: f64,
    /// Spectral vs resistance route for `R*`.
    pub r_star_rel_error: f64,
    /// Bipartite iff the smallest transition eigenvalue is `-1`.
    pub bipartite_consistent: bool,
    pub passed: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RowStatus {
    Match,
    ToleranceMatch,
    Flagged,
    Fail,
}

impl RowStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            RowStatus::Match => "match",
            RowStatus::ToleranceMatch => "tolerance-match",
            RowStatus::Flagged => "flagged",
            RowStatus::Fail => "fail",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub label: String,
    pub bound: BoundId,
    pub computed: Option<f64>,
    pub published: String,
    pub status: RowStatus,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableReproduction {
    pub table: u32,
    pub description: String,
    pub graph: String,
    pub rows: Vec<TableRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonRow {
    pub name: String,
    pub n: usize,
    pub m_edges: usize,
    pub r_plus: f64,
    pub best_lower: Option<BestBound>,
    pub best_upper: Option<BestBound>,
    pub values: Vec<(BoundId, Option<f64>)>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Report {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub indices: Option<IndexValues>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bounds: Option<BoundCatalog>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification: Option<Verification>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub tables: Vec<TableReproduction>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub comparison: Vec<ComparisonRow>,
}

impl Report {
    /// True when any non-flagged reproduction row missed its tolerance.
    pub fn reproduction_failed(&self) -> bool {
        self.tables
            .iter()
            .flat_map(|t| &t.rows)
            .any(|r| r.status == RowStatus::Fail)
    }

    pub fn verification_failed(&self) -> bool {
        self.verification.as_ref().is_some_and(|v| !v.passed)
    }

    pub fn render(&self, format: Format) -> Result<String> {
        Ok(match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self)?;
                s.push('\n');
                s
            }
            Format::Tsv => render_text(self, false),
            Format::Markdown => render_text(self, true),
        })
    }
}

pub fn exact_report(name: &str, g: &Graph) -> Result<Report> {
    Ok(Report {
        graph: Some(GraphSummary::new(name, g)),
        indices: Some(IndexValues::compute(g)?),
        ..Report::default()
    })
}

pub fn bounds_report(name: &str, g: &Graph) -> Result<Report> {
    let rm = effective_resistances(g)?;
    let spec = transition_spectrum(g)?;
    let inputs = BoundInputs::structural(g)
        .with_spectrum(&spec)
        .with_resistances(&rm);
    Ok(Report {
        graph: Some(GraphSummary::new(name, g)),
        indices: Some(IndexValues::from_resistances(g, &rm)),
        bounds: Some(evaluate_all(&inputs)),
        ..Report::default()
    })
}

pub fn verify_report(name: &str, g: &Graph, tol: f64) -> Result<Report> {
    let rm = effective_resistances(g)?;
    let spec = transition_spectrum(g)?;
    let ht = hitting_times(g, &rm);
    let indices = IndexValues::from_resistances(g, &rm);

    let decomposition = decomposition_from_parts(g, &rm, &ht, &spec);
    let lovasz = lovasz_from_parts(&ht, &spec);
    let commute_max_rel_error = ht.max_commute_error(g, &rm);
    let r_star_rel_error = rel_error(indices.r_star, multiplicative_index_from_spectrum(g, &spec));
    let lambda_min = spec.lambda.last().copied().unwrap_or(1.0);
    let bipartite_consistent = g.is_bipartite() == ((lambda_min + 1.0).abs() <= 1e-9);
    let passed = decomposition.passes(tol)
        && lovasz.passes(tol)
        && commute_max_rel_error <= tol
        && r_star_rel_error <= tol
        && bipartite_consistent;

    Ok(Report {
        graph: Some(GraphSummary::new(name, g)),
        indices: Some(indices),
        verification: Some(Verification {
            tolerance: tol,
            decomposition,
            lovasz,
            commute_max_rel_error,
            r_star_rel_error,
            bipartite_consistent,
            passed,
        }),
        ..Report::default()
    })
}

pub fn compare_report(graphs: &[(String, Graph)]) -> Result<Report> {
    let mut comparison = Vec::with_capacity(graphs.len());
    for (name, g) in graphs {
        let rm = effective_resistances(g)?;
        let spec = transition_spectrum(g)?;
        let cat = evaluate_all(
            &BoundInputs::structural(g)
                .with_spectrum(&spec)
                .with_resistances(&rm),
        );
        comparison.push(ComparisonRow {
            name: name.clone(),
            n: g.n(),
            m_edges: g.edge_count(),
            r_plus: IndexValues::from_resistances(g, &rm).r_plus,
            best_lower: cat.best_lower,
            best_upper: cat.best_upper,
            values: cat.results.iter().map(|r| (r.id, r.value)).collect(),
        });
    }
    Ok(Report {
        comparison,
        ..Report::default()
    })
}

#[derive(Debug, Clone, Deserialize)]
struct PublishedTables {
    version: u32,
    tables: Vec<PublishedTable>,
}

#[derive(Debug, Clone, Deserialize)]
struct PublishedTable {
    table: u32,
    description: String,
    graph: FamilySpec,
    rows: Vec<PublishedRow>,
}

#[derive(Debug, Clone, Deserialize)]
struct PublishedRow {
    label: String,
    bound: BoundId,
    published: String,
    #[serde(default)]
    note: Option<String>,
    #[serde(default)]
    flag: Option<String>,
}

fn published_tables() -> Result<PublishedTables> {
    let t: PublishedTables = serde_json::from_str(PUBLISHED_TABLES)?;
    if t.version != 1 {
        return Err(Error::Usage(format!(
            "unsupported table data version {}",
            t.version
        )));
    }
    Ok(t)
}

/// Decides how a computed value compares with a printed one.
///
/// Integer entries must agree exactly (using the exact rational value when
/// the bound has one). Decimal entries are a `match` when the computed value
/// rounds to the printed digits, a `tolerance-match` within
/// `max(0.1%, 0.02)`, and a `fail` otherwise.
pub fn classify(
    computed: Option<f64>,
    exact: Option<num_rational::Ratio<i64>>,
    published: &str,
) -> RowStatus {
    let Some(value) = computed else {
        return RowStatus::Fail;
    };
    match published.split_once('.') {
        None => {
            let Ok(target) = published.parse::<i64>() else {
                return RowStatus::Fail;
            };
            let hit = match exact {
                Some(r) => r == num_rational::Ratio::from_integer(target),
                None => (value - target as f64).abs() <= 1e-9 * 1f64.max(target.abs() as f64),
            };
            if hit {
                RowStatus::Match
            } else {
                RowStatus::Fail
            }
        }
        Some((_, frac)) => {
            let Ok(target) = published.parse::<f64>() else {
                return RowStatus::Fail;
            };
            let digits = frac.len();
            if format!("{value:.digits$}") == published {
                RowStatus::Match
            } else if (value - target).abs() <= (1e-3 * target.abs()).max(0.02) {
                RowStatus::ToleranceMatch
            } else {
                RowStatus::Fail
            }
        }
    }
}

/// Recomputes the selected published tables (`None` = all).
pub fn reproduce(table: Option<u32>) -> Result<Report> {
    let data = published_tables()?;
    let mut tables = Vec::new();
    for t in data
        .tables
        .iter()
        .filter(|t| table.is_none_or(|sel| sel == t.table))
    {
        let g = generate(&t.graph)?;
        let rm = effective_resistances(&g)?;
        let spec = transition_spectrum(&g)?;
        let cat = evaluate_all(
            &BoundInputs::structural(&g)
                .with_spectrum(&spec)
                .with_resistances(&rm),
        );
        let rows = t
            .rows
            .iter()
            .map(|row| {
                let result = cat.get(row.bound);
                let computed = result.and_then(|r| r.value);
                let status = if row.flag.is_some() {
                    RowStatus::Flagged
                } else {
                    classify(computed, result.and_then(|r| r.exact), &row.published)
                };
                TableRow {
                    label: row.label.clone(),
                    bound: row.bound,
                    computed,
                    published: row.published.clone(),
                    status,
                    note: row.flag.clone().or_else(|| row.note.clone()),
                }
            })
            .collect();
        tables.push(TableReproduction {
            table: t.table,
            description: t.description.clone(),
            graph: t.graph.to_string(),
            rows,
        });
    }
    if tables.is_empty() {
        return Err(Error::Usage(format!("no table {}", table.unwrap_or(0))));
    }
    Ok(Report {
        tables,
        ..Report::default()
    })
}

fn num(x: f64) -> String {
    format!("{x}")
}

fn opt(x: Option<f64>) -> String {
    x.map(num).unwrap_or_else(|| "-".to_string())
}

struct Sink {
    out: String,
    markdown: bool,
}

impl Sink {
    fn heading(&mut self, title: &str) {
        if self.markdown {
            let _ = writeln!(self.out, "## {title}\n");
        } else {
            let _ = writeln!(self.out, "# {title}");
        }
    }

    fn table(&mut self, header: &[&str], rows: &[Vec<String>]) {
        let sep = if self.markdown { " | " } else { "\t" };
        let line = |cells: &[String]| {
            if self.markdown {
                format!("| {} |", cells.join(sep))
            } else {
                cells.join(sep)
            }
        };
        let header: Vec<String> = header.iter().map(|s| s.to_string()).collect();
        let _ = writeln!(self.out, "{}", line(&header));
        if self.markdown {
            let rule: Vec<String> = header.iter().map(|_| "---".to_string()).collect();
            let _ = writeln!(self.out, "{}", line(&rule));
        }
        for r in rows {
            let _ = writeln!(self.out, "{}", line(r));
        }
        let _ = writeln!(self.out);
    }
}

fn render_text(report: &Report, markdown: bool) -> String {
    let mut s = Sink {
        out: String::new(),
        markdown,
    };

    if let Some(g) = &report.graph {
        s.heading("graph");
        let hist: Vec<String> = g
            .degree_histogram
            .iter()
            .map(|(d, c)| format!("{d}^{c}"))
            .collect();
        let rows = vec![
            vec!["name".into(), g.name.clone()],
            vec!["N".into(), g.n.to_string()],
            vec!["|E|".into(), g.m_edges.to_string()],
            vec!["degrees".into(), hist.join(" ")],
            vec!["diameter".into(), g.diameter.to_string()],
            vec!["tree".into(), g.is_tree.to_string()],
            vec!["bipartite".into(), g.is_bipartite.to_string()],
            vec!["regular".into(), g.is_regular.to_string()],
            vec!["distance_regular".into(), g.is_distance_regular.to_string()],
        ];
        s.table(&["field", "value"], &rows);
    }

    if let Some(ix) = &report.indices {
        s.heading("indices");
        let rows = vec![
            vec!["R".into(), num(ix.r)],
            vec!["R*".into(), num(ix.r_star)],
            vec!["R+".into(), num(ix.r_plus)],
        ];
        s.table(&["index", "value"], &rows);
    }

    if let Some(cat) = &report.bounds {
        s.heading("bounds");
        let rows: Vec<Vec<String>> = cat
            .results
            .iter()
            .map(|r| {
                vec![
                    r.id.to_string(),
                    format!("{:?}", r.kind).to_lowercase(),
                    opt(r.value),
                    r.applicable.to_string(),
                    r.reason.clone().unwrap_or_default(),
                ]
            })
            .collect();
        s.table(&["id", "kind", "value", "applicable", "reason"], &rows);
        let best = |b: &Option<BestBound>| {
            b.map(|b| format!("{} {}", b.id, num(b.value)))
                .unwrap_or("-".into())
        };
        s.table(
            &["best", "bound"],
            &[
                vec!["lower".into(), best(&cat.best_lower)],
                vec!["upper".into(), best(&cat.best_upper)],
            ],
        );
    }

    if let Some(v) = &report.verification {
        s.heading("verification");
        let rows = vec![
            vec![
                "decomposition (resistance R*)".into(),
                num(v.decomposition.rel_error),
            ],
            vec![
                "decomposition (spectral R*)".into(),
                num(v.decomposition.spectral_rel_error),
            ],
            vec![
                "hitting-time spectral identity".into(),
                num(v.lovasz.max_rel_error),
            ],
            vec![
                "eigenvector weights 1 - pi_j".into(),
                num(v.lovasz.max_weight_residual),
            ],
            vec!["commute identity".into(), num(v.commute_max_rel_error)],
            vec!["R* spectral vs resistance".into(), num(v.r_star_rel_error)],
            vec![
                "bipartite vs lambda_N = -1".into(),
                v.bipartite_consistent.to_string(),
            ],
        ];
        s.table(&["check", "max relative error"], &rows);
        let _ = writeln!(
            s.out,
            "{}\ttolerance {}\n",
            if v.passed { "PASS" } else { "FAIL" },
            num(v.tolerance)
        );
    }

    for t in &report.tables {
        s.heading(&format!("table {}: {}", t.table, t.graph));
        let rows: Vec<Vec<String>> = t
            .rows
            .iter()
            .map(|r| {
                vec![
                    r.label.clone(),
                    r.bound.to_string(),
                    opt(r.computed),
                    r.published.clone(),
                    r.status.as_str().to_string(),
                    r.note.clone().unwrap_or_default(),
                ]
            })
            .collect();
        s.table(
            &["label", "bound", "computed", "published", "status", "note"],
            &rows,
        );
    }

    if !report.comparison.is_empty() {
        s.heading("comparison");
        let mut header = vec!["graph", "N", "|E|", "R+", "best_lower", "best_upper"];
        header.extend(BoundId::ALL.iter().map(|id| id.as_str()));
        let rows: Vec<Vec<String>> = report
            .comparison
            .iter()
            .map(|c| {
                let best = |b: &Option<BestBound>| {
                    b.map(|b| format!("{}={}", b.id, num(b.value)))
                        .unwrap_or("-".into())
                };
                let mut row = vec![
                    c.name.clone(),
                    c.n.to_string(),
                    c.m_edges.to_string(),
                    num(c.r_plus),
                    best(&c.best_lower),
                    best(&c.best_upper),
                ];
                row.extend(c.values.iter().map(|(_, v)| opt(*v)));
                row
            })
            .collect();
        s.table(&header, &rows);
    }
    s.out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    #[test]
    fn classification() {
        assert_eq!(
            classify(Some(332.0), Some(Ratio::from_integer(332)), "332"),
            RowStatus::Match
        );
        assert_eq!(
            classify(Some(332.0), Some(Ratio::new(665, 2)), "332"),
            RowStatus::Fail
        );
        assert_eq!(classify(Some(848.6089), None, "848.61"), RowStatus::Match);
        assert_eq!(
            classify(Some(459.59999999), None, "459.6"),
            RowStatus::Match
        );
        assert_eq!(
            classify(Some(338.0092), None, "338.033"),
            RowStatus::ToleranceMatch
        );
        assert_eq!(
            classify(Some(392.0945), None, "392.12"),
            RowStatus::ToleranceMatch
        );
        assert_eq!(classify(Some(370.0), None, "359.64"), RowStatus::Fail);
        assert_eq!(classify(None, None, "1"), RowStatus::Fail);
    }

    #[test]
    fn table_data_parses() {
        let t = published_tables().unwrap();
        assert_eq!(t.tables.len(), 4);
        assert!(t.tables.iter().all(|t| t.rows.len() == 4));
    }

    #[test]
    fn table_selection() {
        assert_eq!(reproduce(Some(2)).unwrap().tables.len(), 1);
        assert_eq!(reproduce(None).unwrap().tables.len(), 4);
        assert!(reproduce(Some(9)).is_err());
    }

    #[test]
    fn json_round_trip() {
        let g = generate(&FamilySpec::Star(5)).unwrap();
        let mut report = bounds_report("star(5)", &g).unwrap();
        report.verification = verify_report("star(5)", &g, 1e-8).unwrap().verification;
        let text = report.render(Format::Json).unwrap();
        let back: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report);
    }

    #[test]
    fn markdown_and_tsv_are_stable() {
        let g = generate(&FamilySpec::Cycle(6)).unwrap();
        let r = bounds_report("cycle(6)", &g).unwrap();
        for f in [Format::Tsv, Format::Markdown] {
            assert_eq!(
                r.render(f).unwrap(),
                bounds_report("cycle(6)", &g).unwrap().render(f).unwrap()
            );
        }
        assert!(r.render(Format::Markdown).unwrap().contains("| LB-19 |"));
        assert!(r.render(Format::Tsv).unwrap().contains("LB-19\tlower\t"));
    }
}
