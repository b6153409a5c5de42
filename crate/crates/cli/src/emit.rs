//! Appendix tables as symbolic rows or evaluated integers.

use std::ops::RangeInclusive;

use num_bigint::BigInt;
use serde_json::json;
use sscount::arith::{pow2, to_integer};
use sscount::closed_forms::{f2_table1, f2_table2, f_q000, f_q000_row};
use sscount::curves::{closed::twist_row, closed_count_combined, closed_count_twist, Family, TwistClass};
use sscount::symbolic::{self as sym, render_row, Row};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum TableId {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    #[value(name = "3")]
    Three,
    #[value(name = "4")]
    Four,
    #[value(name = "5")]
    Five,
    #[value(name = "c3")]
    C3,
    #[value(name = "c3noroot")]
    C3NoRoot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum TableFormat {
    Csv,
    Md,
    Json,
}

pub struct Table {
    pub title: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn render(&self, fmt: TableFormat) -> String {
        match fmt {
            TableFormat::Csv => {
                let mut out = self.header.join(",") + "\n";
                for row in &self.rows {
                    let cells: Vec<String> = row.iter().map(|c| csv_cell(c)).collect();
                    out += &(cells.join(",") + "\n");
                }
                out
            }
            TableFormat::Md => {
                let mut out = format!("**{}**\n\n| {} |\n", self.title, self.header.join(" | "));
                out += &format!("|{}\n", "---|".repeat(self.header.len()));
                for row in &self.rows {
                    out += &format!("| {} |\n", row.join(" | "));
                }
                out
            }
            TableFormat::Json => {
                let doc = json!({ "title": self.title, "columns": self.header, "rows": self.rows });
                serde_json::to_string_pretty(&doc).expect("table serializes") + "\n"
            }
        }
    }
}

fn csv_cell(c: &str) -> String {
    if c.contains([',', '"']) {
        format!("\"{}\"", c.replace('"', "\"\""))
    } else {
        c.to_string()
    }
}

fn symbolic(title: &str, res_name: &str, cols: &[(&str, &[Row])]) -> Table {
    let period = cols.iter().map(|(_, rows)| rows.len()).max().unwrap_or(0);
    let mut header = vec![res_name.to_string()];
    header.extend(cols.iter().map(|(h, _)| h.to_string()));
    let rows = (0..period)
        .map(|res| {
            let mut row = vec![res.to_string()];
            row.extend(cols.iter().map(|(_, rows)| render_row(rows[res % rows.len()])));
            row
        })
        .collect();
    Table { title: title.into(), header, rows }
}

fn c3_twist_rows(odd: bool) -> Vec<Row> {
    let r = if odd { 1 } else { 2 };
    (0..24).map(|n| twist_row(Family::C3, TwistClass::NoRoot, r, n).expect("row exists").0).collect()
}

/// Symbolic form: one row per residue class of `n`.
pub fn symbolic_table(id: TableId) -> Table {
    match id {
        TableId::One => symbolic(
            "f2(n,t1,t2) = F2(n,t1,t2) - 2^(n-2), by n mod 8",
            "n mod 8",
            &[
                ("(0,0)", &sym::TABLE1_00),
                ("(0,1)", &sym::TABLE1_01),
                ("(1,0)", &sym::TABLE1_10),
                ("(1,1)", &sym::TABLE1_11),
            ],
        ),
        TableId::Two => symbolic(
            "f2(n,0,t2,t3) = F2(n,0,t2,t3) - 2^(n-3), by n mod 24",
            "n mod 24",
            &[
                ("(0,0,0)", &sym::TABLE2_000),
                ("(0,0,1)", &sym::TABLE2_001),
                ("(0,1,0)", &sym::TABLE2_010),
                ("(0,1,1)", &sym::TABLE2_011),
            ],
        ),
        TableId::Three => symbolic(
            "#C1 - (2^(rn)+1), by n mod 8",
            "n mod 8",
            &[("r odd", &sym::TABLE3_ODD), ("r even", &sym::TABLE3_EVEN)],
        ),
        TableId::Four => symbolic(
            "#C2 - (2^(rn)+1), by n mod 24 (r odd rows repeat mod 8)",
            "n mod 24",
            &[("r odd", &sym::TABLE4_ODD), ("r even", &sym::TABLE4_EVEN)],
        ),
        TableId::Five => symbolic(
            "F_q(n,0,0,0) - q^(n-3), by n mod 24",
            "n mod 24",
            &[("r odd", &sym::TABLE5_ODD), ("r even", &sym::TABLE5_EVEN)],
        ),
        TableId::C3 => symbolic(
            "#C3 - (2^(rn)+1), by n mod 24",
            "n mod 24",
            &[("r odd", &sym::C3_ODD), ("r even", &sym::C3_EVEN)],
        ),
        TableId::C3NoRoot => {
            let odd = c3_twist_rows(true);
            let even = c3_twist_rows(false);
            symbolic(
                "#C3_alpha - (2^(rn)+1), x^3+x+1/alpha without roots, by n mod 24",
                "n mod 24",
                &[("r odd", &odd), ("r even", &even)],
            )
        }
    }
}

/// Evaluated form over `n_range` at `q = 2^r`.
pub fn evaluated_table(id: TableId, r: u32, n_range: RangeInclusive<u64>) -> sscount::Result<Table> {
    let mut rows = Vec::new();
    let (title, header): (String, Vec<String>) = match id {
        TableId::One => {
            for n in n_range {
                let mut row = vec![n.to_string()];
                for (t1, t2) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
                    row.push(f2_table1(n, t1, t2)?.value.to_string());
                }
                rows.push(row);
            }
            ("f2(n,t1,t2)".into(), ["n", "(0,0)", "(0,1)", "(1,0)", "(1,1)"].map(String::from).to_vec())
        }
        TableId::Two => {
            for n in n_range {
                let mut row = vec![n.to_string()];
                for (t2, t3) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
                    row.push(f2_table2(n, t2, t3)?.value.to_string());
                }
                rows.push(row);
            }
            ("f2(n,0,t2,t3)".into(), ["n", "(0,0,0)", "(0,0,1)", "(0,1,0)", "(0,1,1)"].map(String::from).to_vec())
        }
        TableId::Five => {
            for n in n_range {
                let v = f_q000(r, n)?.value;
                let dev = to_integer(&sym::eval_row(f_q000_row(r, n), r, n)?)?;
                rows.push(vec![n.to_string(), v.to_string(), dev.to_string()]);
            }
            (format!("F_q(n,0,0,0), q = 2^{r}"), ["n", "count", "deviation"].map(String::from).to_vec())
        }
        TableId::Three | TableId::Four | TableId::C3 | TableId::C3NoRoot => {
            for n in n_range {
                let v = match id {
                    TableId::Three => closed_count_combined(Family::C1, r, n)?.value,
                    TableId::Four => closed_count_combined(Family::C2, r, n)?.value,
                    TableId::C3 => closed_count_combined(Family::C3, r, n)?.value,
                    _ => closed_count_twist(Family::C3, TwistClass::NoRoot, r, n)?.value,
                };
                let dev: BigInt = &v - pow2(r as u64 * n) - 1;
                rows.push(vec![n.to_string(), v.to_string(), dev.to_string()]);
            }
            let curve = match id {
                TableId::Three => "C1",
                TableId::Four => "C2",
                TableId::C3 => "C3",
                _ => "C3 twist without roots",
            };
            (format!("points on {curve} over GF(2^({r}n))"), ["n", "count", "deviation"].map(String::from).to_vec())
        }
    };
    Ok(Table { title, header, rows })
}
