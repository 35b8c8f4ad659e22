//! Plain-text rendering, one line per row: the basement cell in brackets,
//! then each box with its anchor first and free entries after it.
//!
//! ```text
//! [1] 1 1
//! [2]
//! [3] 3,2
//! ```

use std::fmt;

use super::{Basement, SetFilling};

impl fmt::Display for SetFilling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 1..=self.num_rows() {
            if r > 1 {
                writeln!(f)?;
            }
            let mut cells: Vec<String> = Vec::new();
            match self.basement() {
                Basement::Values(v) => cells.push(format!("[{}]", v[r - 1])),
                Basement::Large => cells.push("[*]".into()),
                Basement::Absent => {}
            }
            let inner = self.inner().map_or(0, |i| i[r - 1]);
            cells.extend(std::iter::repeat_n("[*]".to_string(), inner));
            for c in inner + 1..=self.shape()[r - 1] {
                let b = self.box_at(r, c).expect("box inside the shape");
                let s: Vec<String> = b.values().iter().map(|v| v.to_string()).collect();
                cells.push(s.join(","));
            }
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}
