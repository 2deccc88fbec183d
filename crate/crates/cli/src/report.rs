use serde::Serialize;
use twoknot::FamilyRecord;

pub const TOOL_VERSION: &str = concat!("twoknot ", env!("CARGO_PKG_VERSION"));

/// Nothing in the pipeline is randomized; the seed is reported for the record.
pub const SEED: u64 = 0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Tsv,
}

/// `key: value` lines with values aligned.
pub fn aligned(rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0) + 1;
    let mut out = String::new();
    for (k, v) in rows {
        out.push_str(&format!("{:<width$} {v}\n", format!("{k}:")));
    }
    out
}

pub fn json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable report");
    s.push('\n');
    s
}

#[derive(Serialize)]
pub struct AlexReport {
    pub tool_version: &'static str,
    pub seed: u64,
    pub input: String,
    pub presentation: String,
    pub weights: Vec<i64>,
    pub h1: String,
    pub e1_zero: bool,
    pub delta: Option<String>,
    pub delta_principal: Option<bool>,
}

impl AlexReport {
    pub fn text(&self) -> String {
        let mut rows = vec![
            ("presentation", self.presentation.clone()),
            ("weights", format!("({})", join(&self.weights))),
            ("H1", self.h1.clone()),
        ];
        match (&self.delta, self.delta_principal) {
            (Some(d), Some(principal)) => {
                rows.push(("delta", d.clone()));
                rows.push(("E1", if principal { "principal (certified)" } else { "gcd of minors only" }.into()));
            }
            _ => rows.push(("E1", "0 (no Alexander polynomial)".into())),
        }
        aligned(&rows)
    }
}

#[derive(Serialize)]
pub struct FamilyReport<'a> {
    pub tool_version: &'static str,
    pub seed: u64,
    #[serde(flatten)]
    pub record: &'a FamilyRecord,
}

fn counts(c: &twoknot::HandleCounts) -> String {
    c.to_string()
}

pub fn family_text(r: &FamilyRecord) -> String {
    aligned(&[
        ("p, q", format!("{}, {}", r.p, r.q)),
        ("parity", r.parity.to_string()),
        ("relator", r.relator.clone()),
        ("H1", r.h1.clone()),
        ("delta", r.delta.clone()),
        ("principal", r.delta_principal.to_string()),
        ("spun obstruction", r.spun_obstruction.to_string()),
        ("gluck pi1", format!("{:?}", r.gluck_pi1).to_lowercase()),
        ("complement", counts(&r.handle_counts.complement)),
        ("gluck single", counts(&r.handle_counts.gluck_single)),
        ("gluck double", counts(&r.handle_counts.gluck_double)),
    ])
}

pub const TSV_HEADER: &str = "p\tq\tparity\trelator\tdelta\tdelta_principal\th1\tgluck_pi1\tcomplement\tgluck_single\tgluck_double\tspun_obstruction\n";

pub fn family_tsv_row(r: &FamilyRecord) -> String {
    format!(
        "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
        r.p,
        r.q,
        r.parity,
        r.relator,
        r.delta,
        r.delta_principal,
        r.h1,
        format!("{:?}", r.gluck_pi1).to_lowercase(),
        r.handle_counts.complement,
        r.handle_counts.gluck_single,
        r.handle_counts.gluck_double,
        r.spun_obstruction
    )
}

/// Fixed-width table for grid sweeps in text mode.
pub fn family_table(records: &[FamilyRecord]) -> String {
    let header = ["p", "q", "parity", "relator", "delta", "principal", "H1", "gluck pi1", "spun"];
    let rows: Vec<[String; 9]> = records
        .iter()
        .map(|r| {
            [
                r.p.to_string(),
                r.q.to_string(),
                r.parity.to_string(),
                r.relator.clone(),
                r.delta.clone(),
                r.delta_principal.to_string(),
                r.h1.clone(),
                format!("{:?}", r.gluck_pi1).to_lowercase(),
                r.spun_obstruction.to_string(),
            ]
        })
        .collect();
    let mut widths = header.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: &[&str]| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, &w)| format!("{c:<w$}")).collect();
        format!("{}\n", padded.join("  ").trim_end())
    };
    let mut out = line(&header);
    for row in &rows {
        out.push_str(&line(&row.iter().map(String::as_str).collect::<Vec<_>>()));
    }
    out
}

#[derive(Serialize)]
pub struct GluckReport {
    pub tool_version: &'static str,
    pub seed: u64,
    pub input: String,
    pub kill: String,
    pub variant: String,
    pub framing: i8,
    pub bands: [usize; 2],
    pub quotient: String,
    pub pi1: String,
    pub order: Option<usize>,
    pub counts_before: [u64; 5],
    pub counts_after: [u64; 5],
    pub chi_before: i64,
    pub chi_after: i64,
    pub moves: Vec<String>,
}

impl GluckReport {
    pub fn text(&self) -> String {
        let pi1 = match (self.pi1.as_str(), self.order) {
            ("inconclusive", Some(n)) => format!("inconclusive (order {n})"),
            (s, _) => s.to_string(),
        };
        let show = |c: &[u64; 5]| twoknot::HandleCounts(*c).to_string();
        aligned(&[
            ("presentation", self.input.clone()),
            ("kill", self.kill.clone()),
            ("variant", format!("{} (framing {:+})", self.variant, self.framing)),
            ("quotient", self.quotient.clone()),
            ("pi1", pi1),
            ("counts", format!("{} -> {}", show(&self.counts_before), show(&self.counts_after))),
            ("chi", format!("{} -> {}", self.chi_before, self.chi_after)),
            ("moves", self.moves.join("; ")),
        ])
    }
}

#[derive(Serialize)]
pub struct EnumReport {
    pub tool_version: &'static str,
    pub seed: u64,
    pub input: String,
    pub subgroup: Vec<String>,
    pub max_cosets: usize,
    pub status: &'static str,
    pub order: Option<usize>,
    pub cosets_defined: usize,
}

impl EnumReport {
    pub fn text(&self) -> String {
        let result = match self.order {
            Some(n) if self.subgroup.is_empty() => format!("order {n}"),
            Some(n) => format!("index {n}"),
            None => format!("exceeded {}", self.max_cosets),
        };
        let subgroup = if self.subgroup.is_empty() { "1".to_string() } else { self.subgroup.join(", ") };
        aligned(&[
            ("presentation", self.input.clone()),
            ("subgroup", subgroup),
            ("result", result),
            ("cosets defined", self.cosets_defined.to_string()),
        ])
    }
}

fn join(v: &[i64]) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(", ")
}
