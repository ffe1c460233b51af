//! ASCII rendering of a fundamental domain: each row of the bounding box is
//! printed with the filling values, dots marking cells outside the domain.

use dpt_core::{Cell, Dpt};

pub fn render(dpt: &Dpt) -> String {
    let cells = dpt.cells();
    let words = dpt.reading_word();
    let min_x = cells.iter().map(|c| c.x).min().expect("nonempty domain");
    let max_x = cells.iter().map(|c| c.x).max().expect("nonempty domain");
    let width = words.iter().max().map_or(1, |v| v.to_string().len()).max(1);
    let n = dpt.params().big_n;
    let mut out = String::new();
    for y in 0..n {
        let mut line = String::new();
        for x in min_x..=max_x {
            let token = match cells.iter().position(|c| *c == Cell::new(x, y)) {
                Some(i) => words[i].to_string(),
                None => ".".to_string(),
            };
            line.push_str(&format!(" {token:>width$}"));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}
