//! Line-oriented knot list files: named PD codes, composites, comments.
//!
//! ```text
//! # full-line comments only; '#' inside a line is the connected-sum operator
//! 3_1 pd:(1,4,2,5)(3,6,4,1)(5,2,6,3)
//! granny = 3_1 # 3_1
//! unknot
//! ```

use crate::error::{Error, Result};
use crate::pd::{parse_pd, KnotDiagram};
use std::collections::HashMap;

pub fn parse_knot_list(text: &str) -> Result<Vec<KnotDiagram>> {
    let mut knots: Vec<KnotDiagram> = vec![];
    let mut by_name: HashMap<String, usize> = HashMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: String| Error::KnotList(format!("line {}: {}", lineno + 1, msg));
        let d = if line == "unknot" {
            KnotDiagram::unknot()
        } else if let Some((name, rhs)) = line.split_once('=') {
            let name = name.trim();
            let mut parts = vec![];
            for part_name in rhs.split('#') {
                let part_name = part_name.trim();
                let &i = by_name
                    .get(part_name)
                    .ok_or_else(|| err(format!("unknown summand {part_name:?}")))?;
                parts.push(knots[i].clone());
            }
            KnotDiagram::connected_sum(name, &parts)
                .map_err(|e| err(format!("connected sum failed: {e}")))?
        } else {
            let (name, body) = line
                .split_once(char::is_whitespace)
                .ok_or_else(|| err("expected NAME followed by a PD code".into()))?;
            let mut d = parse_pd(body.trim()).or_else(|e| {
                if body.trim() == "unknot" {
                    Ok(KnotDiagram::unknot())
                } else {
                    Err(err(format!("{e}")))
                }
            })?;
            d.name = name.trim().to_string();
            d
        };
        if by_name.contains_key(&d.name) {
            return Err(err(format!("duplicate knot name {:?}", d.name)));
        }
        by_name.insert(d.name.clone(), knots.len());
        knots.push(d);
    }
    Ok(knots)
}

pub fn find<'a>(knots: &'a [KnotDiagram], name: &str) -> Result<&'a KnotDiagram> {
    knots
        .iter()
        .find(|k| k.name == name)
        .ok_or_else(|| Error::KnotList(format!("no knot named {name:?} in the input")))
}
