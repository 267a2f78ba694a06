//! Golden tables: the five `sp_4` sheets and every maximal-Levi sheet of a
//! group acting on dimension at most 12.

use std::path::{Path, PathBuf};

use crate::sheets::{
    all_maximal_levi_labels, gln_sheet, maximal_levi_sheet, sheets_sp4, GroupKind, LeviLabel,
    SheetDescriptor,
};

pub const TABLE1_FILE: &str = "table1.json";
pub const TABLE2_FILE: &str = "table2.json";

/// Largest natural dimension covered by the maximal-Levi table.
pub const TABLE2_MAX_N: usize = 12;

fn family_index(kind: GroupKind) -> usize {
    match kind {
        GroupKind::A(_) => 0,
        GroupKind::B(_) => 1,
        GroupKind::C(_) => 2,
        GroupKind::D(_) => 3,
        GroupKind::F4 => 4,
    }
}

/// Maximal-Levi sheets ordered by class, then family, dimension and block size.
pub fn table2() -> Vec<SheetDescriptor> {
    let mut rows: Vec<SheetDescriptor> = all_maximal_levi_labels(TABLE2_MAX_N)
        .into_iter()
        .map(|(kind, levi)| match &levi {
            LeviLabel::Gl { m } => gln_sheet(m),
            _ => maximal_levi_sheet(kind, &levi),
        })
        .collect::<crate::Result<_>>()
        .expect("every enumerated label is valid");
    let key = |s: &SheetDescriptor| {
        let block = match &s.levi {
            LeviLabel::Gl { m } => m.parts()[1],
            LeviLabel::MaxLevi { a, .. } => *a,
            _ => 0,
        };
        (
            s.class_tag,
            family_index(s.kind),
            s.kind.natural_dim(),
            block,
        )
    };
    rows.sort_by_key(key);
    rows
}

fn render(rows: &[SheetDescriptor]) -> String {
    let mut s = serde_json::to_string_pretty(rows).expect("descriptors serialize");
    s.push('\n');
    s
}

pub fn table1_json() -> String {
    render(&sheets_sp4())
}

pub fn table2_json() -> String {
    render(&table2())
}

/// Writes both tables into `dir`, returning the paths written.
pub fn write_fixtures(dir: &Path) -> std::io::Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir)?;
    let mut written = Vec::new();
    for (name, body) in [(TABLE1_FILE, table1_json()), (TABLE2_FILE, table2_json())] {
        let path = dir.join(name);
        std::fs::write(&path, body)?;
        written.push(path);
    }
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_round_trip() {
        for body in [table1_json(), table2_json()] {
            let rows: Vec<SheetDescriptor> = serde_json::from_str(&body).unwrap();
            assert_eq!(render(&rows), body);
        }
    }

    #[test]
    fn table2_is_sorted_by_class() {
        let rows = table2();
        assert!(rows.windows(2).all(|w| w[0].class_tag <= w[1].class_tag));
    }
}
