//! Embedded tables as emit-ready rows.

use wfano_core::classification::aset;
use wfano_core::reference::{table1_cell, CubicRow, CubicTable, Marker, TABLE1, TABLE4};
use wfano_core::surfaces::Category;
use wfano_core::{classify, link_descriptor};

use crate::args::TableName;
use crate::report::Row;

pub fn rows(table: TableName) -> Vec<Row> {
    match table {
        TableName::One => table_one(),
        TableName::Two => table_two(),
        TableName::CubicI => cubic(CubicTable::I),
        TableName::CubicIi => cubic(CubicTable::Ii),
        TableName::CubicIii => cubic(CubicTable::Iii),
        TableName::Four => table_four(),
    }
}

pub fn title(table: TableName) -> &'static str {
    match table {
        TableName::One => "Smooth curves with 4d - 30 <= g <= 14, and (19,12)",
        TableName::Two => "Links from the blow-up",
        TableName::CubicI => "Curves on a cubic: ample",
        TableName::CubicIi => "Curves on a cubic: small",
        TableName::CubicIii => "Curves on a cubic: divisorial",
        TableName::Four => "Curves on the rational quartic",
    }
}

fn marker_str(m: Marker) -> &'static str {
    match m {
        Marker::Bold => "bold",
        Marker::Plain => "plain",
        Marker::Star => "star",
        Marker::Crossed => "crossed",
    }
}

fn table_one() -> Vec<Row> {
    TABLE1
        .iter()
        .map(|cell| {
            let c = cell.curve_type;
            let mut row = Row::new(c.genus(), c.degree());
            row.category = Some(cell.marker.category().as_str().to_string());
            row.link = link_descriptor(c).map(|l| l.target);
            row.aset = aset(c).map(|a| a.as_str().to_string());
            row.column = Some(cell.column.as_str().to_string());
            row.marker = Some(marker_str(cell.marker).to_string());
            row
        })
        .collect()
}

fn table_two() -> Vec<Row> {
    TABLE1
        .iter()
        .filter_map(|cell| {
            let c = cell.curve_type;
            let link = link_descriptor(c)?;
            let mut row = Row::new(c.genus(), c.degree());
            row.dim_anti = Some(classify(c).dim_anti);
            row.category = Some(cell.marker.category().as_str().to_string());
            row.link = Some(link.target);
            row.aset = aset(c).map(|a| a.as_str().to_string());
            row.flop = Some(link.has_flop);
            Some(row)
        })
        .collect()
}

fn cubic(table: CubicTable) -> Vec<Row> {
    table
        .rows()
        .iter()
        .map(|r| cubic_row(r, table.category()))
        .collect()
}

fn cubic_row(r: &CubicRow, category: Category) -> Row {
    let c = r.curve_type;
    let mut row = Row::new(c.genus(), c.degree());
    row.k = Some(r.k);
    row.mults = Some(r.mults.to_vec());
    row.four_secants = r.four_secants;
    row.dim_anti = r.dim_anti;
    row.category = Some(category.as_str().to_string());
    row.link = link_descriptor(c).map(|l| l.target);
    row
}

fn table_four() -> Vec<Row> {
    TABLE4
        .iter()
        .map(|r| {
            let c = r.curve_type;
            let mut row = Row::new(c.genus(), c.degree());
            row.k = Some(r.k);
            row.mults = Some(r.mults.to_vec());
            row.category = table1_cell(c).map(|cell| cell.marker.category().as_str().to_string());
            row.link = link_descriptor(c).map(|l| l.target);
            row.conic_secancy = Some(r.conic_secancy);
            row.cubic_secancy = Some(r.cubic_secancy);
            row
        })
        .collect()
}

/// Differences between `got` and the embedded rows, one line each.
pub fn diff(table: TableName, got: &[Row]) -> Vec<String> {
    let want = rows(table);
    let mut out = Vec::new();
    if got.len() != want.len() {
        out.push(format!(
            "row count: expected {}, found {}",
            want.len(),
            got.len()
        ));
    }
    for (i, (w, g)) in want.iter().zip(got).enumerate() {
        if w != g {
            let show = |r: &Row| serde_json::to_string(r).expect("row serializes");
            out.push(format!("row {i}: expected {}, found {}", show(w), show(g)));
        }
    }
    out
}
