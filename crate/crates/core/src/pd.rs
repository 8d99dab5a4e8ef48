//! Planar diagram codes: parsing, validation, face combinatorics,
//! connected sums, and mirrors.
//!
//! Convention: a diagram with n crossings has edges labeled 1..2n in order
//! along the knot. Each crossing is a quadruple (a,b,c,d) listed
//! counterclockwise starting from the incoming under-strand edge a, so
//! c = a+1 (mod 2n) is the outgoing under-strand and the over-strand runs
//! b -> d or d -> b, whichever pair is consecutive.

use crate::error::{Error, Result};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotDiagram {
    pub name: String,
    pub crossings: Vec<[u32; 4]>,
    /// names of the summands when this was built as a connected sum
    pub summands: Vec<String>,
}

/// Faces of the underlying 4-valent planar graph. Corner k of a crossing is
/// the region between slots k and k+1 (counterclockwise).
pub struct Faces {
    pub n_faces: usize,
    pub face_of_corner: Vec<[usize; 4]>,
}

impl KnotDiagram {
    pub fn unknot() -> Self {
        KnotDiagram { name: "unknot".into(), crossings: vec![], summands: vec![] }
    }

    pub fn n_crossings(&self) -> usize {
        self.crossings.len()
    }

    pub fn n_edges(&self) -> u32 {
        2 * self.crossings.len() as u32
    }

    pub fn succ(&self, x: u32) -> u32 {
        x % self.n_edges() + 1
    }

    pub fn under_in(&self, c: usize) -> u32 {
        self.crossings[c][0]
    }

    pub fn under_out(&self, c: usize) -> u32 {
        self.crossings[c][2]
    }

    /// The incoming edge of the over-strand at crossing c.
    pub fn over_in(&self, c: usize) -> u32 {
        let [_, b, _, d] = self.crossings[c];
        if self.succ(b) == d { b } else { d }
    }

    pub fn over_out(&self, c: usize) -> u32 {
        let [_, b, _, d] = self.crossings[c];
        if self.succ(b) == d { d } else { b }
    }

    /// Where each edge label appears: (crossing index, slot 0..3), in input
    /// order. Every edge of a valid diagram appears exactly twice.
    pub fn incidences(&self) -> Vec<Vec<(usize, usize)>> {
        let mut inc = vec![vec![]; self.n_edges() as usize + 1];
        for (ci, q) in self.crossings.iter().enumerate() {
            for (s, &e) in q.iter().enumerate() {
                if (e as usize) < inc.len() {
                    inc[e as usize].push((ci, s));
                }
            }
        }
        inc
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.n_crossings();
        if n == 0 {
            return Ok(());
        }
        let m = self.n_edges();
        let mut count = vec![0u32; m as usize + 1];
        for q in &self.crossings {
            for &e in q {
                if e == 0 || e > m {
                    return Err(Error::MalformedDiagram(format!(
                        "edge label {e} out of range 1..{m}"
                    )));
                }
                count[e as usize] += 1;
            }
        }
        if let Some(e) = (1..=m).find(|&e| count[e as usize] != 2) {
            return Err(Error::MalformedDiagram(format!(
                "edge label {e} appears {} times, expected 2",
                count[e as usize]
            )));
        }
        for (ci, q) in self.crossings.iter().enumerate() {
            let [a, b, c, d] = *q;
            if self.succ(a) != c {
                return Err(Error::MalformedDiagram(format!(
                    "crossing {ci}: under-strand {a} -> {c} is not consecutive \
                     (link input or wrong edge ordering)"
                )));
            }
            if self.succ(b) != d && self.succ(d) != b {
                return Err(Error::MalformedDiagram(format!(
                    "crossing {ci}: over-strand pair {b},{d} is not consecutive"
                )));
            }
        }
        let faces = self.faces()?;
        if faces.n_faces != n + 2 {
            return Err(Error::MalformedDiagram(format!(
                "{} faces for {n} crossings; diagram is not planar",
                faces.n_faces
            )));
        }
        Ok(())
    }

    /// Traces the faces of the planar map given by the quadruples' rotation
    /// system. Errors if some edge does not appear exactly twice.
    pub fn faces(&self) -> Result<Faces> {
        let n = self.n_crossings();
        let inc = self.incidences();
        for e in 1..inc.len() {
            if inc[e].len() != 2 {
                return Err(Error::MalformedDiagram(format!(
                    "edge label {e} appears {} times, expected 2",
                    inc[e].len()
                )));
            }
        }
        // darts: (edge, direction); dart (e, dir) runs from inc[e][dir]
        // to inc[e][1-dir]. Next dart of the face: arrive at (c, s), leave
        // along the edge at slot s+1.
        let mut face_of_corner = vec![[usize::MAX; 4]; n];
        let mut dart_seen = vec![[false; 2]; inc.len()];
        let mut n_faces = 0;
        for e0 in 1..inc.len() {
            for dir0 in 0..2 {
                if dart_seen[e0][dir0] {
                    continue;
                }
                let face = n_faces;
                n_faces += 1;
                let (mut e, mut dir) = (e0, dir0);
                loop {
                    if dart_seen[e][dir] {
                        break;
                    }
                    dart_seen[e][dir] = true;
                    let (c, s) = inc[e][1 - dir]; // head of this dart
                    face_of_corner[c][s] = face;
                    let s2 = (s + 1) % 4;
                    let e2 = self.crossings[c][s2] as usize;
                    let at = inc[e2].iter().position(|&(ci, si)| (ci, si) == (c, s2)).unwrap();
                    e = e2;
                    dir = at;
                }
            }
        }
        Ok(Faces { n_faces, face_of_corner })
    }

    /// Splices the given diagrams into a single composite diagram. Inputs
    /// must be valid; label parity is normalized so alternation survives.
    pub fn connected_sum(name: &str, parts: &[KnotDiagram]) -> Result<KnotDiagram> {
        assert!(!parts.is_empty());
        let mut crossings: Vec<[u32; 4]> = vec![];
        let mut total: u32 = 0; // edges so far
        let mut summands = vec![];
        for part in parts {
            summands.push(part.name.clone());
            if part.n_crossings() == 0 {
                continue;
            }
            let part = part.normalized_parity()?;
            let m = part.n_edges();
            if total == 0 {
                crossings.extend(part.crossings.iter().copied());
                total = m;
                continue;
            }
            // close the existing diagram's last edge (label `total`) through
            // the new summand: old labels shift by `total`; the head
            // occurrence of the previous closing edge takes the grand total
            // label, and the head occurrence of the summand's closing edge
            // takes the label `total`.
            let grand = total + m;
            let prev_head = find_head_occurrence(&crossings, total);
            let new_head = find_head_occurrence(&part.crossings, m);
            let mut shifted: Vec<[u32; 4]> =
                part.crossings.iter().map(|q| q.map(|e| e + total)).collect();
            shifted[new_head.0][new_head.1] = total;
            crossings[prev_head.0][prev_head.1] = grand;
            crossings.extend(shifted);
            total = grand;
        }
        let d = KnotDiagram { name: name.to_string(), crossings, summands };
        d.validate()?;
        Ok(d)
    }

    /// Rotates labels so every under-strand enters on an odd edge, the
    /// convention assumed when splicing alternating diagrams.
    pub fn normalized_parity(&self) -> Result<KnotDiagram> {
        let odd = self.crossings.iter().filter(|q| q[0] % 2 == 1).count();
        if odd == self.n_crossings() {
            return Ok(self.clone());
        }
        if odd != 0 {
            return Err(Error::MalformedDiagram(format!(
                "{}: mixed under-strand parity; diagram is not alternating",
                self.name
            )));
        }
        let m = self.n_edges();
        let crossings = self.crossings.iter().map(|q| q.map(|e| e % m + 1)).collect();
        Ok(KnotDiagram { name: self.name.clone(), crossings, summands: self.summands.clone() })
    }

    /// The mirror image: over and under strands swapped at every crossing,
    /// labels rotated to restore the odd-under convention.
    pub fn mirror(&self) -> KnotDiagram {
        let crossings = self
            .crossings
            .iter()
            .map(|&[a, b, c, d]| {
                // new under-in is the old over-in; keep counterclockwise order
                if self.succ(b) == d {
                    [b, c, d, a]
                } else {
                    [d, a, b, c]
                }
            })
            .collect();
        let m = KnotDiagram {
            name: format!("{}!", self.name),
            crossings,
            summands: vec![],
        };
        m.normalized_parity().unwrap_or(m)
    }

    pub fn to_pd_string(&self) -> String {
        if self.crossings.is_empty() {
            return "unknot".to_string();
        }
        let body: String = self
            .crossings
            .iter()
            .map(|[a, b, c, d]| format!("({a},{b},{c},{d})"))
            .collect();
        format!("pd:{body}")
    }
}

impl fmt::Display for KnotDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_pd_string())
    }
}

/// The occurrence (crossing, slot) at which `edge` is incoming.
fn find_head_occurrence(crossings: &[[u32; 4]], edge: u32) -> (usize, usize) {
    let m = crossings.len() as u32 * 2;
    let succ = |x: u32| x % m + 1;
    for (ci, q) in crossings.iter().enumerate() {
        let [a, b, _, d] = *q;
        if a == edge {
            return (ci, 0);
        }
        if b == edge && succ(b) == d {
            return (ci, 1);
        }
        if d == edge && succ(d) == b {
            return (ci, 3);
        }
    }
    panic!("edge {edge} has no incoming occurrence");
}

/// Parses a PD-code string: `unknot`, or a list of quadruples written as
/// `X(a,b,c,d) ...` or `pd:(a,b,c,d)(e,f,g,h)...`. The diagram is validated.
pub fn parse_pd(text: &str) -> Result<KnotDiagram> {
    let text = text.trim();
    if text == "unknot" {
        return Ok(KnotDiagram::unknot());
    }
    let body = text.strip_prefix("pd:").unwrap_or(text);
    let mut crossings = vec![];
    let mut rest = body;
    while let Some(start) = rest.find('(') {
        let lead = rest[..start].trim();
        if !(lead.is_empty() || lead == "X" || lead.eq_ignore_ascii_case("x")) {
            return Err(Error::MalformedDiagram(format!("unexpected token {lead:?}")));
        }
        let end = rest[start..]
            .find(')')
            .ok_or_else(|| Error::MalformedDiagram("unbalanced parenthesis".into()))?
            + start;
        let nums: Vec<&str> = rest[start + 1..end].split(',').map(str::trim).collect();
        if nums.len() != 4 {
            return Err(Error::MalformedDiagram(format!(
                "crossing needs 4 edge labels, got {}",
                nums.len()
            )));
        }
        let mut q = [0u32; 4];
        for (i, s) in nums.iter().enumerate() {
            q[i] = s
                .parse()
                .map_err(|_| Error::MalformedDiagram(format!("bad edge label {s:?}")))?;
        }
        crossings.push(q);
        rest = &rest[end + 1..];
    }
    if !rest.trim().is_empty() {
        return Err(Error::MalformedDiagram(format!("trailing input {:?}", rest.trim())));
    }
    if crossings.is_empty() {
        return Err(Error::MalformedDiagram("no crossings found".into()));
    }
    let d = KnotDiagram { name: String::new(), crossings, summands: vec![] };
    d.validate()?;
    Ok(d)
}
