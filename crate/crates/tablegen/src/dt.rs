//! Even-label pairing sequences ("pairing codes") for crossing diagrams.
//!
//! A diagram traversal visits each of the n crossings twice, at positions
//! 1..2n along the strand. One visit lands on an odd position, the other on an
//! even one, so the diagram is captured by the sequence a[0..n) where a[i] is
//! the even label paired with odd label 2i+1.
//!
//! This module enumerates candidate sequences for reduced prime diagrams,
//! filtering by chord conditions that are necessary for a planar realization:
//! every chord must cross an even number of other chords, at least two of
//! them, and no proper cyclic interval of labels may be closed under the
//! pairing (which would mean a connected sum or a removable crossing).
//! Planarity itself is decided elsewhere.

/// a[i] is the even label paired with odd label 2i+1; labels run 1..=2n.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct DtCode(pub Vec<u16>);

impl DtCode {
    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// partner[p] = the position (0-based) paired with position p.
    pub fn partners(&self) -> Vec<usize> {
        let n = self.n();
        let mut partner = vec![0usize; 2 * n];
        for (i, &a) in self.0.iter().enumerate() {
            let p = 2 * i;
            let q = a as usize - 1;
            partner[p] = q;
            partner[q] = p;
        }
        partner
    }

    /// Chord endpoints as positions, (smaller, larger).
    pub fn chords(&self) -> Vec<(usize, usize)> {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &a)| {
                let p = 2 * i;
                let q = a as usize - 1;
                (p.min(q), p.max(q))
            })
            .collect()
    }

    /// Symmetric adjacency of the chord crossing graph: chords interlace when
    /// exactly one endpoint of one lies between the endpoints of the other.
    pub fn interlacement(&self) -> Vec<Vec<bool>> {
        let n = self.n();
        let ch = self.chords();
        let mut adj = vec![vec![false; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let (p1, p2) = ch[i];
                let (q1, q2) = ch[j];
                let in1 = p1 < q1 && q1 < p2;
                let in2 = p1 < q2 && q2 < p2;
                if in1 != in2 {
                    adj[i][j] = true;
                    adj[j][i] = true;
                }
            }
        }
        adj
    }

    /// Every chord crosses an even, nonzero number of chords.
    pub fn has_even_interlacement(&self) -> bool {
        self.interlacement()
            .iter()
            .all(|row| {
                let d = row.iter().filter(|&&b| b).count();
                d >= 2 && d % 2 == 0
            })
    }

    /// No cyclic interval of 2..2n-2 positions is closed under the pairing.
    /// A closed interval would split off a diagram summand or an isolated
    /// removable crossing.
    pub fn is_prime_interval_free(&self) -> bool {
        let n = self.n();
        if n <= 1 {
            return n == 1;
        }
        let partner = self.partners();
        let len = 2 * n;
        for s in 0..len {
            // m = furthest partner offset seen inside the interval so far
            let mut m = 0usize;
            for l in 1..=len - 2 {
                let p = (s + l - 1) % len;
                let off = (partner[p] + len - s) % len;
                m = m.max(off);
                if l >= 2 && m <= l - 1 {
                    return false;
                }
            }
        }
        true
    }

    /// The chord crossing graph is connected (holds for prime diagrams and is
    /// relied on when propagating local data chord to chord).
    pub fn is_interlacement_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return false;
        }
        let adj = self.interlacement();
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for w in 0..n {
                if adj[v][w] && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|b| b)
    }

    /// Lexicographically least sequence over all 4n relabelings: any of the 2n
    /// starting positions combined with either traversal direction.
    pub fn canonical_form(&self) -> DtCode {
        let n = self.n();
        let len = 2 * n;
        let partner = self.partners();
        let mut best: Option<Vec<u16>> = None;
        for start in 0..len {
            for &dir in &[1usize, len - 1] {
                // old position of new position t is start + dir*t
                let mut new_of_old = vec![0usize; len];
                let mut old = start;
                for t in 0..len {
                    new_of_old[old] = t;
                    old = (old + dir) % len;
                }
                // read the sequence in the new labeling
                let mut seq = vec![0u16; n];
                let mut ok = true;
                let mut old = start;
                for t in 0..len {
                    if t % 2 == 0 {
                        let q = new_of_old[partner[old]];
                        if q % 2 == 0 {
                            ok = false;
                            break;
                        }
                        seq[t / 2] = (q + 1) as u16;
                    }
                    old = (old + dir) % len;
                }
                if ok && best.as_ref().is_none_or(|b| seq < *b) {
                    best = Some(seq);
                }
            }
        }
        DtCode(best.expect("pairing always admits an odd/even relabeling"))
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical_form() == *self
    }
}

/// Enumerates canonical pairing codes of reduced prime diagrams with n
/// crossings that pass the chord parity filters. The callback receives each
/// surviving code once; planarity has not yet been checked.
pub fn enumerate(n: usize, mut f: impl FnMut(&DtCode)) {
    if n == 0 {
        return;
    }
    let len = 2 * n;
    let mut seq = vec![0u16; n];
    let mut used = vec![false; n + 1]; // used[k] marks even label 2k taken
    let mut pos_used = vec![false; len];
    for i in 0..n {
        pos_used[2 * i] = true; // odd labels are consumed in scan order
    }

    struct State<'a, F: FnMut(&DtCode)> {
        n: usize,
        len: usize,
        seq: &'a mut Vec<u16>,
        used: &'a mut Vec<bool>,
        pos_used: &'a mut Vec<bool>,
        f: &'a mut F,
    }

    /// Crossing count of the chord (p, q) if no future placement can change
    /// it, else None. Chords i+1..n have one endpoint pinned at position 2j
    /// while their even-label endpoint ranges over the free odd-index slots.
    fn settled_count<F: FnMut(&DtCode)>(
        st: &State<F>,
        placed: usize,
        c: usize,
        p: usize,
        q: usize,
    ) -> Option<usize> {
        let inside = |r: usize| p < r && r < q;
        let mut free_in = 0usize;
        let mut free_out = 0usize;
        for r in (1..st.len).step_by(2) {
            if !st.pos_used[r] {
                if inside(r) {
                    free_in += 1;
                } else {
                    free_out += 1;
                }
            }
        }
        if free_in > 0 && free_out > 0 {
            return None;
        }
        let mut count = 0usize;
        for j in 0..=placed {
            if j == c {
                continue;
            }
            let a = 2 * j;
            let b = st.seq[j] as usize - 1;
            if inside(a) != inside(b) {
                count += 1;
            }
        }
        // with all free slots on one side, each future chord's contribution
        // is decided by its pinned endpoint
        for j in placed + 1..st.n {
            let pinned_in = inside(2 * j);
            if (free_in == 0 && pinned_in) || (free_out == 0 && !pinned_in) {
                count += 1;
            }
        }
        Some(count)
    }

    fn rec<F: FnMut(&DtCode)>(st: &mut State<F>, i: usize) {
        if i == st.n {
            let code = DtCode(st.seq.clone());
            if code.is_prime_interval_free() && code.is_canonical() {
                (st.f)(&code);
            }
            return;
        }
        for k in 1..=st.n {
            if st.used[k] {
                continue;
            }
            let label = (2 * k) as u16;
            let q = 2 * k - 1; // position of the even label
            let p = 2 * i; // position of odd label 2i+1
            // adjacent endpoints make a removable crossing
            let d = (q + st.len - p) % st.len;
            if d == 1 || d == st.len - 1 {
                continue;
            }
            st.seq[i] = label;
            st.used[k] = true;
            st.pos_used[q] = true;

            // reject as soon as any settled chord has a bad crossing count
            let mut ok = true;
            for j in 0..=i {
                let pj = 2 * j;
                let qj = st.seq[j] as usize - 1;
                let (lo, hi) = (pj.min(qj), pj.max(qj));
                if let Some(c) = settled_count(st, i, j, lo, hi) {
                    if c == 0 || c % 2 != 0 {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                rec(st, i + 1);
            }

            st.pos_used[q] = false;
            st.used[k] = false;
        }
        st.seq[i] = 0;
    }

    let mut st = State {
        n,
        len,
        seq: &mut seq,
        used: &mut used,
        pos_used: &mut pos_used,
        f: &mut f,
    };
    rec(&mut st, 0);
}
