//! Enumerates knot shadows by drawing them: the strand is traced one passage
//! at a time while the planar map built so far is kept explicit as a rotation
//! system. Extending the strand means inserting an edge between two corners
//! of the same face, so only planar diagrams are ever produced and the
//! crossing rotations needed for the crossing-list output come for free.
//!
//! At each position the strand either meets a fresh crossing (placed in the
//! current face) or returns to a crossing it has met once, crossing the
//! earlier strand transversally from either side. A final edge closes the
//! curve back to the start through the one corner that keeps the start
//! crossing transversal.
//!
//! A corner of the map is the angular sector between a dart and its cyclic
//! successor in the rotation at a crossing; corners are named by their first
//! dart, and a face is the set of corners reached by the face walk, stored
//! as a dart bitmask (at most 4n darts, so a u64 suffices up to 16
//! crossings).

use crate::dt::DtCode;
use std::collections::HashSet;
use std::sync::atomic::{AtomicUsize, Ordering};

static NODES: AtomicUsize = AtomicUsize::new(0);
static CLOSURES: AtomicUsize = AtomicUsize::new(0);
static EMITS: AtomicUsize = AtomicUsize::new(0);
static DUPS: AtomicUsize = AtomicUsize::new(0);

/// (nodes, closure attempts, emit attempts, duplicate rejects) since start.
pub fn stats() -> (usize, usize, usize, usize) {
    (
        NODES.swap(0, Ordering::Relaxed),
        CLOSURES.swap(0, Ordering::Relaxed),
        EMITS.swap(0, Ordering::Relaxed),
        DUPS.swap(0, Ordering::Relaxed),
    )
}

/// Darts are created in twin pairs, so the partner dart of d is d^1.
pub fn twin_of(d: u32) -> u32 {
    d ^ 1
}

/// Diagram produced by the tracer: the canonical pairing code plus the
/// as-traced combinatorial data. `visits`, `rot` and the dart arrays use the
/// traversal labeling (position p carries edge label p+1), not the canonical
/// relabeling.
pub struct Shadow {
    pub code: DtCode,
    /// visits[p] = crossing id met at position p (0-based)
    pub visits: Vec<u32>,
    /// rot[v] = cyclic list of darts at crossing v in rotation order
    pub rot: Vec<Vec<u32>>,
    /// dart_label[d] = strand edge label 1..=2n carried by dart d
    pub dart_label: Vec<u16>,
    /// dart_head[d] = true when the edge arrives at the dart's crossing
    pub dart_head: Vec<bool>,
}

struct Trace<'a, F: FnMut(Shadow)> {
    n: usize,
    rot: Vec<Vec<u32>>,
    dart_vertex: Vec<u32>,
    dart_twin: Vec<u32>,
    dart_label: Vec<u16>,
    dart_head: Vec<bool>,
    visits: Vec<u32>,
    pending: Vec<u32>,
    first_pos: Vec<usize>,
    // partner_pos[p] = position paired with p, or usize::MAX while open
    partner_pos: Vec<usize>,
    tip_vertex: u32,
    // out-dart of the next edge goes into this corner of the tip:
    // the sector from rot[tip][c] to its cyclic successor
    tip_corner: usize,
    seen: HashSet<DtCode>,
    out: &'a mut F,
}

struct EdgeUndo {
    at_tail: usize,
    at_head: usize,
}

impl<'a, F: FnMut(Shadow)> Trace<'a, F> {
    /// Bitmask over corner-naming darts of the face containing (v, i).
    fn face_mask(&self, v: u32, i: usize) -> u64 {
        let mut mask = 0u64;
        let (mut cv, mut ci) = (v, i);
        loop {
            let rot = &self.rot[cv as usize];
            mask |= 1u64 << rot[ci];
            let leave = rot[(ci + 1) % rot.len()];
            let arrive = self.dart_twin[leave as usize];
            let w = self.dart_vertex[arrive as usize];
            let wrot = &self.rot[w as usize];
            ci = wrot.iter().position(|&d| d == arrive).unwrap();
            cv = w;
            if (cv, ci) == (v, i) {
                return mask;
            }
        }
    }

    /// Adds the strand edge from the tip corner to corner (w, j); the new
    /// arriving dart lands inside that corner. Both corners must lie on the
    /// same face. Returns undo info; darts are always the last two created.
    fn add_edge(&mut self, label: u16, w: u32, j: usize) -> EdgeUndo {
        let d_out = self.dart_vertex.len() as u32;
        let d_in = d_out + 1;
        let v = self.tip_vertex;
        self.dart_vertex.push(v);
        self.dart_vertex.push(w);
        self.dart_twin.push(d_in);
        self.dart_twin.push(d_out);
        self.dart_label.push(label);
        self.dart_label.push(label);
        self.dart_head.push(false);
        self.dart_head.push(true);
        let at = if self.rot[v as usize].is_empty() { 0 } else { self.tip_corner + 1 };
        self.rot[v as usize].insert(at, d_out);
        // inserting at v can shift the target index when v == w
        let mut jj = j;
        if v == w && at <= j {
            jj += 1;
        }
        let at_head = if self.rot[w as usize].is_empty() { 0 } else { jj + 1 };
        self.rot[w as usize].insert(at_head, d_in);
        EdgeUndo { at_tail: at, at_head }
    }

    fn remove_edge(&mut self, w: u32, undo: EdgeUndo) {
        let v = self.tip_vertex;
        self.rot[w as usize].remove(undo.at_head);
        self.rot[v as usize].remove(undo.at_tail);
        for _ in 0..2 {
            self.dart_vertex.pop();
            self.dart_twin.pop();
            self.dart_label.pop();
            self.dart_head.pop();
        }
    }

    /// True if the visit list just closed a proper interval of positions in
    /// which every crossing appears exactly twice: such a diagram has a
    /// connected sum or removable crossing, so the branch is abandoned.
    fn closes_summand_interval(&self) -> bool {
        let t = self.visits.len();
        let n = self.n;
        if t < 2 || t == 2 * n {
            return false;
        }
        let mut count = [0u8; 16];
        let mut open = 0usize;
        for s in (0..t - 1).rev() {
            let c = self.visits[s] as usize;
            count[c] += 1;
            match count[c] {
                1 => open += 1,
                _ => open -= 1,
            }
            let len = t - s;
            if len % 2 == 0 && len < 2 * n - 1 && open == 0 {
                return true;
            }
        }
        false
    }

    /// True when some other rooting (basepoint and direction) of the traced
    /// curve already compares lexicographically smaller on the entries of the
    /// pairing sequence that are decided for both rootings. The same diagram
    /// is then found by the traversal rooted there instead.
    fn beaten_by_other_rooting(&self) -> bool {
        let len = 2 * self.n;
        let pp = &self.partner_pos;
        for s in 0..len {
            for dir in [1usize, len - 1] {
                if s == 0 && dir == 1 {
                    continue;
                }
                let open_bound = self.visits.len() + 1; // open chords close later
                for i in 0..self.n {
                    let mine = pp[2 * i];
                    let old_t = (s + dir * (2 * i)) % len;
                    let q = pp[old_t];
                    let a = if mine == usize::MAX { usize::MAX } else { mine + 1 };
                    let ar = if q == usize::MAX {
                        usize::MAX
                    } else {
                        (q + len - s) % len * dir % len + 1
                    };
                    match (a, ar) {
                        (usize::MAX, usize::MAX) => break,
                        (usize::MAX, v) if v < open_bound => return true,
                        (v, usize::MAX) if v < open_bound => break,
                        (usize::MAX, _) | (_, usize::MAX) => break,
                        (a, ar) if ar < a => return true,
                        (a, ar) if ar > a => break,
                        _ => {}
                    }
                }
            }
        }
        false
    }

    /// Necessary condition for the trace to be completable: faces only ever
    /// get subdivided, so a corner that must still be used (a pending
    /// crossing, or the closing corner at the start) has to lie in a face
    /// connected to the tip's face, where crossing a pending crossing joins
    /// the faces of its two corners.
    fn feasible(&self) -> bool {
        let nd = self.dart_vertex.len();
        if nd == 0 {
            return true;
        }
        // face id per corner-naming dart
        let mut face_id = vec![u32::MAX; nd];
        let mut nf = 0u32;
        for d0 in 0..nd as u32 {
            if face_id[d0 as usize] != u32::MAX {
                continue;
            }
            let mut cv = self.dart_vertex[d0 as usize];
            let mut ci = self.rot[cv as usize].iter().position(|&d| d == d0).unwrap();
            loop {
                let rot = &self.rot[cv as usize];
                face_id[rot[ci] as usize] = nf;
                let leave = rot[(ci + 1) % rot.len()];
                let arrive = self.dart_twin[leave as usize];
                cv = self.dart_vertex[arrive as usize];
                ci = self.rot[cv as usize].iter().position(|&d| d == arrive).unwrap();
                if face_id[self.rot[cv as usize][ci] as usize] != u32::MAX {
                    break;
                }
            }
            nf += 1;
        }
        let mut parent: Vec<u32> = (0..nf).collect();
        fn root(parent: &mut [u32], mut x: u32) -> u32 {
            while parent[x as usize] != x {
                parent[x as usize] = parent[parent[x as usize] as usize];
                x = parent[x as usize];
            }
            x
        }
        for &c in &self.pending {
            let rot = &self.rot[c as usize];
            if rot.len() == 2 {
                let a = root(&mut parent, face_id[rot[0] as usize]);
                let b = root(&mut parent, face_id[rot[1] as usize]);
                parent[a as usize] = b;
            }
        }
        let tip_rot = &self.rot[self.tip_vertex as usize];
        let tip = root(&mut parent, face_id[tip_rot[self.tip_corner] as usize]);
        for &c in &self.pending {
            let rot = &self.rot[c as usize];
            if root(&mut parent, face_id[rot[0] as usize]) != tip {
                return false;
            }
        }
        // once the start crossing is complete, its closing corner must stay
        // reachable too
        let srot = &self.rot[0];
        if srot.len() == 3 {
            let j = (0..3)
                .find(|&i| srot[i] != 0 && srot[(i + 1) % 3] != 0)
                .unwrap();
            if root(&mut parent, face_id[srot[j] as usize]) != tip {
                return false;
            }
        }
        true
    }

    fn emit(&mut self) {
        let n = self.n;
        let mut a = vec![0u16; n];
        let mut first = vec![usize::MAX; n];
        for (p, &c) in self.visits.iter().enumerate() {
            let c = c as usize;
            if first[c] == usize::MAX {
                first[c] = p;
            } else {
                let (p1, p2) = (first[c], p);
                let (even, odd) = if p1 % 2 == 0 { (p1, p2) } else { (p2, p1) };
                a[even / 2] = (odd + 1) as u16;
            }
        }
        let code = DtCode(a);
        if !code.is_prime_interval_free() {
            return;
        }
        EMITS.fetch_add(1, Ordering::Relaxed);
        let canon = code.canonical_form();
        if !self.seen.insert(canon.clone()) {
            DUPS.fetch_add(1, Ordering::Relaxed);
            return;
        }
        (self.out)(Shadow {
            code: canon,
            visits: self.visits.clone(),
            rot: self.rot.clone(),
            dart_label: self.dart_label.clone(),
            dart_head: self.dart_head.clone(),
        });
    }

    fn close_and_emit(&mut self) {
        let srot = &self.rot[0];
        debug_assert_eq!(srot.len(), 3);
        // the unique corner at the start not touching the original out-dart
        let start_out = 0u32;
        let j = (0..3)
            .find(|&i| srot[i] != start_out && srot[(i + 1) % 3] != start_out)
            .unwrap();
        let corner_dart = srot[j];
        let face = self.face_mask(self.tip_vertex, self.tip_corner);
        if face & (1u64 << corner_dart) == 0 {
            return;
        }
        let undo = self.add_edge((2 * self.n) as u16, 0, j);
        debug_assert!(self.rot.iter().all(|r| r.len() == 4));
        self.emit();
        self.remove_edge(0, undo);
    }

    fn rec(&mut self) {
        NODES.fetch_add(1, Ordering::Relaxed);
        let n = self.n;
        let p = self.visits.len();
        if p == 2 * n {
            CLOSURES.fetch_add(1, Ordering::Relaxed);
            self.close_and_emit();
            return;
        }
        if self.beaten_by_other_rooting() || !self.feasible() {
            return;
        }

        let label = p as u16;
        let face = if self.rot[self.tip_vertex as usize].is_empty() {
            u64::MAX // lone start vertex: the whole sphere is one face
        } else {
            self.face_mask(self.tip_vertex, self.tip_corner)
        };
        let (save_tip, save_corner) = (self.tip_vertex, self.tip_corner);

        // meet a fresh crossing in the current face
        if self.rot.len() < n {
            let w = self.rot.len() as u32;
            self.rot.push(Vec::new());
            self.pending.push(w);
            self.visits.push(w);
            self.first_pos.push(p);
            let undo = self.add_edge(label, w, 0);
            self.tip_vertex = w;
            self.tip_corner = 0;
            self.rec();
            self.tip_vertex = save_tip;
            self.tip_corner = save_corner;
            self.remove_edge(w, undo);
            self.first_pos.pop();
            self.visits.pop();
            self.pending.pop();
            self.rot.pop();
        }

        // return to a crossing met once, from either side of the earlier strand
        for idx in 0..self.pending.len() {
            let w = self.pending[idx];
            if w == *self.visits.last().unwrap() {
                continue; // immediate return makes a removable crossing
            }
            if w == 0 && p == 2 * n - 1 {
                continue; // returning to the start last does too
            }
            let deg = self.rot[w as usize].len();
            let corners: &[usize] = if w == 0 {
                // the start still has its open end; approach is through its
                // single corner, but the strand may continue on either side
                debug_assert_eq!(deg, 1);
                &[0]
            } else {
                debug_assert_eq!(deg, 2);
                &[0, 1]
            };
            for &j in corners {
                if face & (1u64 << self.rot[w as usize][j]) == 0 {
                    continue;
                }
                let moved = *self.pending.last().unwrap();
                self.pending.swap_remove(idx);
                self.visits.push(w);
                let fp = self.first_pos[w as usize];
                self.partner_pos[fp] = p;
                self.partner_pos[p] = fp;
                let undo = self.add_edge(label, w, j);
                if !self.closes_summand_interval() {
                    self.tip_vertex = w;
                    if w == 0 {
                        for out_corner in 0..2 {
                            self.tip_corner = out_corner;
                            self.rec();
                        }
                    } else {
                        // continue on the far side of the crossed strand
                        self.tip_corner = (j + 2) % 3;
                        self.rec();
                    }
                    self.tip_vertex = save_tip;
                    self.tip_corner = save_corner;
                }
                self.remove_edge(w, undo);
                self.partner_pos[fp] = usize::MAX;
                self.partner_pos[p] = usize::MAX;
                self.visits.pop();
                if idx < self.pending.len() {
                    self.pending.push(moved);
                    self.pending[idx] = w;
                } else {
                    self.pending.push(w);
                }
            }
        }
    }
}

/// Enumerates every reduced prime knot shadow with n crossings, one shadow
/// per pairing code (mirror images are not distinguished).
pub fn enumerate_shadows(n: usize, mut out: impl FnMut(Shadow)) {
    if n == 0 || n > 15 {
        return;
    }
    let mut tr = Trace {
        n,
        rot: vec![Vec::new()],
        dart_vertex: Vec::new(),
        dart_twin: Vec::new(),
        dart_label: Vec::new(),
        dart_head: Vec::new(),
        visits: vec![0],
        pending: vec![0],
        first_pos: vec![0],
        partner_pos: vec![usize::MAX; 2 * n],
        tip_vertex: 0,
        tip_corner: 0,
        seen: HashSet::new(),
        out: &mut out,
    };
    tr.rec();
}
