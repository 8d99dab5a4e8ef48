//! Groups the enumerated shadows into knots and assigns table names.
//!
//! Two reduced prime alternating diagrams show the same knot exactly when
//! tangle-slides connect them, so knots are the connected components of the
//! slide relation. Each knot is represented by its least pairing code, and
//! knots of a given crossing number are numbered in ascending code order:
//! 12a1, 12a2, ... for twelve crossings.

use crate::dt::DtCode;
use crate::flype::FMap;
use crate::trace::enumerate_shadows;
use persieve_core::pd::KnotDiagram;
use std::collections::HashMap;

pub struct TableEntry {
    pub name: String,
    pub code: DtCode,
    pub diagram: KnotDiagram,
    /// number of distinct diagrams of this knot
    pub diagrams: usize,
}

fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Enumerates all shadows with n crossings, groups them into knots, and
/// returns the knots sorted by their least pairing code.
pub fn build_table(n: usize) -> Vec<TableEntry> {
    let mut codes: Vec<DtCode> = Vec::new();
    let mut maps: Vec<FMap> = Vec::new();
    enumerate_shadows(n, |s| {
        maps.push(FMap::from_shadow(&s));
        codes.push(s.code.clone());
    });
    let index: HashMap<DtCode, usize> =
        codes.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();

    let mut parent: Vec<usize> = (0..codes.len()).collect();
    for (i, m) in maps.iter().enumerate() {
        for code in m.move_neighbors() {
            let &j = index
                .get(&code)
                .expect("slide move must land on an enumerated diagram");
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a] = b;
            }
        }
    }

    let mut classes: HashMap<usize, Vec<usize>> = HashMap::new();
    for i in 0..codes.len() {
        let r = find(&mut parent, i);
        classes.entry(r).or_default().push(i);
    }
    let mut knots: Vec<(DtCode, usize, usize)> = classes
        .values()
        .map(|members| {
            let &best = members.iter().min_by_key(|&&i| &codes[i]).unwrap();
            (codes[best].clone(), best, members.len())
        })
        .collect();
    knots.sort();

    knots
        .into_iter()
        .enumerate()
        .map(|(rank, (code, best, diagrams))| {
            let name = format!("{}a{}", n, rank + 1);
            let diagram = maps[best].to_diagram(&name);
            TableEntry { name, code, diagram, diagrams }
        })
        .collect()
}
