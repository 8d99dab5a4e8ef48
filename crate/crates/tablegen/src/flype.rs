//! Tangle-slide moves on shadows. Two reduced prime alternating diagrams
//! show the same knot exactly when a sequence of these moves connects them:
//! a crossing next to a four-ended tangle slides to the tangle's other side
//! while the tangle turns over. Grouping diagrams by the closure of this
//! move therefore groups them by knot.
//!
//! A shadow is held as a quadrivalent map: each crossing has four slots in
//! rotation order, opposite slots belong to the same strand, and `adj` glues
//! slot to slot.

use crate::dt::DtCode;
use persieve_core::pd::KnotDiagram;

pub type Slot = (u16, u8);

#[derive(Clone, PartialEq, Eq)]
pub struct FMap {
    pub adj: Vec<[Slot; 4]>,
}

impl FMap {
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn from_shadow(s: &crate::trace::Shadow) -> FMap {
        let n = s.rot.len();
        let mut slot_of_dart = vec![(0u16, 0u8); 2 * s.rot.len() * 2];
        for (c, rot) in s.rot.iter().enumerate() {
            for (k, &d) in rot.iter().enumerate() {
                slot_of_dart[d as usize] = (c as u16, k as u8);
            }
        }
        let mut adj = vec![[(0u16, 0u8); 4]; n];
        for (c, rot) in s.rot.iter().enumerate() {
            for (k, &d) in rot.iter().enumerate() {
                let twin = crate::trace::twin_of(d);
                adj[c][k] = slot_of_dart[twin as usize];
            }
        }
        FMap { adj }
    }

    fn face_count(&self) -> usize {
        let n = self.n();
        let mut seen = vec![[false; 4]; n];
        let mut faces = 0;
        for c0 in 0..n {
            for k0 in 0..4 {
                if seen[c0][k0] {
                    continue;
                }
                faces += 1;
                let (mut c, mut k) = (c0, k0);
                while !seen[c][k] {
                    seen[c][k] = true;
                    let (nc, nk) = self.adj[c][(k + 1) % 4];
                    c = nc as usize;
                    k = nk as usize;
                }
            }
        }
        faces
    }

    pub fn is_planar(&self) -> bool {
        self.face_count() == self.n() + 2
    }

    /// Follows the strand: enter a crossing at `slot`, leave at the opposite
    /// slot, and return the entering slot at the next crossing.
    fn step(&self, (c, k): Slot) -> Slot {
        self.adj[c as usize][(k as usize + 2) % 4]
    }

    /// Entering slots along the full traversal, starting by entering
    /// crossing 0 at slot 0.
    fn traversal(&self) -> Vec<Slot> {
        let n = self.n();
        let mut out = Vec::with_capacity(2 * n);
        let mut cur = (0u16, 0u8);
        for _ in 0..2 * n {
            out.push(cur);
            cur = self.step(cur);
        }
        debug_assert_eq!(cur, (0, 0));
        out
    }

    pub fn dt_code(&self) -> DtCode {
        let n = self.n();
        let tour = self.traversal();
        let mut first = vec![usize::MAX; n];
        let mut a = vec![0u16; n];
        for (p, &(c, _)) in tour.iter().enumerate() {
            let c = c as usize;
            if first[c] == usize::MAX {
                first[c] = p;
            } else {
                let (p1, p2) = (first[c], p);
                let (even, odd) = if p1 % 2 == 0 { (p1, p2) } else { (p2, p1) };
                a[even / 2] = (odd + 1) as u16;
            }
        }
        DtCode(a)
    }

    /// Alternating crossing-list diagram; under-passages sit at odd
    /// traversal positions so under-strand entries get odd edge labels.
    pub fn to_diagram(&self, name: &str) -> KnotDiagram {
        let n = self.n();
        let tour = self.traversal();
        let mut label = vec![[0u32; 4]; n];
        for (p, &(c, k)) in tour.iter().enumerate() {
            let inc = if p == 0 { 2 * n } else { p };
            label[c as usize][k as usize] = inc as u32;
            label[c as usize][(k as usize + 2) % 4] = (p + 1) as u32;
        }
        let mut under_slot = vec![4usize; n];
        for (p, &(c, k)) in tour.iter().enumerate() {
            if p % 2 == 1 {
                under_slot[c as usize] = k as usize;
            }
        }
        let crossings = (0..n)
            .map(|c| {
                let s = under_slot[c];
                [
                    label[c][s],
                    label[c][(s + 1) % 4],
                    label[c][(s + 2) % 4],
                    label[c][(s + 3) % 4],
                ]
            })
            .collect();
        KnotDiagram { name: name.into(), crossings, summands: Vec::new() }
    }

    /// Canonical codes of every diagram reachable by one tangle-slide.
    pub fn move_neighbors(&self) -> Vec<DtCode> {
        let n = self.n();
        let tour = self.traversal();
        let mut out = Vec::new();
        for c in 0..n as u16 {
            for k in 0..4u8 {
                self.moves_at(&tour, c, k, &mut out);
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// Tangle-slides where crossing c's adjacent slot pair (k, k+1) faces
    /// the tangle. The tangle's crossings all lie on the two strand walks
    /// entering it there, so candidate tangles are pairs of walk prefixes.
    fn moves_at(&self, tour: &[Slot], c: u16, k: u8, out: &mut Vec<DtCode>) {
        let n = self.n();
        let alpha = (c, k);
        let beta = (c, (k + 1) % 4);
        // walks from the two tangle-side slots, stopping when they return to c
        let walk = |start: Slot| -> Vec<Slot> {
            let mut w = Vec::new();
            let mut cur = self.adj[start.0 as usize][start.1 as usize];
            while cur.0 != c {
                w.push(cur);
                cur = self.step(cur);
            }
            w
        };
        let w1 = walk(alpha);
        let w2 = walk(beta);
        let mut in_t = vec![false; n];
        for i in 1..=w1.len() {
            for x in in_t.iter_mut() {
                *x = false;
            }
            for &(v, _) in &w1[..i] {
                in_t[v as usize] = true;
            }
            for j in 1..=w2.len() {
                in_t[w2[j - 1].0 as usize] = true;
                // boundary slots of T must be exactly the four cut ends
                let cuts = [
                    self.adj[c as usize][k as usize],
                    self.adj[c as usize][(k as usize + 1) % 4],
                    {
                        let (v, s) = w1[i - 1];
                        (v, (s + 2) % 4)
                    },
                    {
                        let (v, s) = w2[j - 1];
                        (v, (s + 2) % 4)
                    },
                ];
                let mut ok = true;
                let mut boundary = 0;
                'scan: for (v, slots) in self.adj.iter().enumerate() {
                    if !in_t[v] {
                        continue;
                    }
                    for (s, &(w, _)) in slots.iter().enumerate() {
                        if !in_t[w as usize] {
                            boundary += 1;
                            if !cuts.contains(&(v as u16, s as u8)) {
                                ok = false;
                                break 'scan;
                            }
                        }
                    }
                }
                if ok && boundary == 4 && !in_t.iter().all(|&x| x) {
                    self.apply_move(tour, c, k, i, j, out);
                }
            }
        }
    }

    /// Rewrites the traversal for the slide: each passage of c jumps to the
    /// far end of its strand's segment inside the tangle (i crossings on the
    /// strand through slot k, j on the strand through slot k+1), then reads
    /// the pairing code back off the new traversal.
    fn apply_move(&self, tour: &[Slot], c: u16, k: u8, i: usize, j: usize, out: &mut Vec<DtCode>) {
        let len = tour.len();
        let mut next = vec![0usize; len];
        let mut prev = vec![0usize; len];
        for p in 0..len {
            next[p] = (p + 1) % len;
            prev[(p + 1) % len] = p;
        }
        let unlink = |next: &mut [usize], prev: &mut [usize], p: usize| {
            let (a, b) = (prev[p], next[p]);
            next[a] = b;
            prev[b] = a;
        };
        let link_after = |next: &mut [usize], prev: &mut [usize], a: usize, p: usize| {
            let b = next[a];
            next[a] = p;
            prev[p] = a;
            next[p] = b;
            prev[b] = p;
        };
        let mut moved = false;
        for p in 0..len {
            let (v, s) = tour[p];
            if v != c {
                continue;
            }
            // the tangle-side exit of this passage and its segment length
            let (toward_tangle, seg) = if s == (k + 2) % 4 {
                (true, i) // leaves toward the tangle: segment follows p
            } else if s == k {
                (false, i) // arrives from the tangle: segment precedes p
            } else if s == (k + 3) % 4 {
                (true, j)
            } else {
                (false, j)
            };
            unlink(&mut next, &mut prev, p);
            if toward_tangle {
                let anchor = (p + seg) % len;
                link_after(&mut next, &mut prev, anchor, p);
            } else {
                let anchor = (p + len - seg) % len;
                let before = prev[anchor];
                link_after(&mut next, &mut prev, before, p);
            }
            moved = true;
        }
        debug_assert!(moved);
        // read the new cyclic visit order and its pairing
        let n = self.n();
        let mut seq = Vec::with_capacity(len);
        let mut p = next[tour.iter().position(|&(v, _)| v != c).unwrap()];
        let start = p;
        loop {
            seq.push(tour[p].0);
            p = next[p];
            if p == start {
                break;
            }
        }
        debug_assert_eq!(seq.len(), len);
        let mut first = vec![usize::MAX; n];
        let mut a = vec![0u16; n];
        for (q, &v) in seq.iter().enumerate() {
            let v = v as usize;
            if first[v] == usize::MAX {
                first[v] = q;
            } else {
                let (p1, p2) = (first[v], q);
                debug_assert_ne!(p1 % 2, p2 % 2);
                let (even, odd) = if p1 % 2 == 0 { (p1, p2) } else { (p2, p1) };
                a[even / 2] = (odd + 1) as u16;
            }
        }
        let code = DtCode(a);
        debug_assert!(code.is_prime_interval_free());
        out.push(code.canonical_form());
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trace::enumerate_shadows;

    #[test]
    fn map_roundtrip_preserves_code() {
        for n in 3..=8 {
            enumerate_shadows(n, |s| {
                let m = FMap::from_shadow(&s);
                assert!(m.is_planar());
                assert_eq!(m.dt_code().canonical_form(), s.code);
                m.to_diagram("t").validate().unwrap();
            });
        }
    }

    #[test]
    fn moves_stay_within_the_same_crossing_number() {
        enumerate_shadows(7, |s| {
            let m = FMap::from_shadow(&s);
            for code in m.move_neighbors() {
                assert_eq!(code.n(), 7);
                assert!(code.is_prime_interval_free());
            }
        });
    }
}
