//! Checkerboard colorings and the negative-definite Goeritz form of a
//! reduced alternating diagram.

use crate::error::{Error, Result};
use crate::pd::KnotDiagram;
use crate::snf::Mat;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Corner parity whose crossings count positively into the form. The two
/// parities correspond to the two checkerboard colorings and differ by a
/// global mirror; this choice pins the chirality convention that the
/// correction-term calibration test locks in.
pub const POSITIVE_CORNER_PARITY: usize = 0;

#[derive(Clone, Debug)]
pub struct GoeritzForm {
    /// negative definite symmetric matrix, rank = #white regions - 1
    pub matrix: Mat,
    pub determinant: BigInt,
    pub source: String,
}

impl GoeritzForm {
    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    /// Homology order of the double branched cover.
    pub fn group_order(&self) -> BigInt {
        self.determinant.abs()
    }
}

/// Builds the Goeritz forms of both checkerboard colorings and returns the
/// negative definite one.
pub fn goeritz(d: &KnotDiagram) -> Result<GoeritzForm> {
    if d.n_crossings() == 0 {
        return Ok(GoeritzForm {
            matrix: vec![],
            determinant: BigInt::one(),
            source: d.name.clone(),
        });
    }
    let faces = d.faces()?;
    let colors = two_color(d, &faces)?;
    for white in 0..2u8 {
        if let Some(m) = build_form(d, &faces, &colors, white)? {
            if let Some(minors) = leading_principal_minors(&m) {
                let alternating = minors
                    .iter()
                    .enumerate()
                    .all(|(k, det)| det.sign() == expected_sign(k + 1));
                if alternating {
                    let determinant =
                        minors.last().cloned().unwrap_or_else(BigInt::one);
                    if determinant.abs().is_even_int() {
                        return Err(Error::EvenDeterminant(d.name.clone()));
                    }
                    return Ok(GoeritzForm { matrix: m, determinant, source: d.name.clone() });
                }
            }
        }
    }
    Err(Error::NotNegativeDefinite(d.name.clone()))
}

fn expected_sign(k: usize) -> num_bigint::Sign {
    if k % 2 == 1 { num_bigint::Sign::Minus } else { num_bigint::Sign::Plus }
}

trait EvenCheck {
    fn is_even_int(&self) -> bool;
}
impl EvenCheck for BigInt {
    fn is_even_int(&self) -> bool {
        num_integer::Integer::is_even(self)
    }
}

/// Two-colors the faces so that faces sharing an edge get opposite colors.
fn two_color(d: &KnotDiagram, faces: &crate::pd::Faces) -> Result<Vec<u8>> {
    // corner k and corner k+1 share the edge at slot k+1: opposite colors;
    // propagate until stable
    let mut color = vec![u8::MAX; faces.n_faces];
    let mut changed = true;
    color[0] = 0;
    while changed {
        changed = false;
        for c in 0..d.n_crossings() {
            for k in 0..4 {
                let f1 = faces.face_of_corner[c][k];
                let f2 = faces.face_of_corner[c][(k + 1) % 4];
                match (color[f1], color[f2]) {
                    (u8::MAX, u8::MAX) => {}
                    (a, u8::MAX) => {
                        color[f2] = 1 - a;
                        changed = true;
                    }
                    (u8::MAX, b) => {
                        color[f1] = 1 - b;
                        changed = true;
                    }
                    (a, b) if a == b => {
                        return Err(Error::MalformedDiagram(format!(
                            "{}: faces are not checkerboard colorable",
                            d.name
                        )));
                    }
                    _ => {}
                }
            }
        }
    }
    if color.contains(&u8::MAX) {
        return Err(Error::MalformedDiagram(format!("{}: disconnected faces", d.name)));
    }
    Ok(color)
}

/// The reduced Goeritz matrix for the coloring in which `white` is the
/// white color class. Crossings whose white corners sit at the positive
/// parity contribute +1 off-diagonal, the others -1; for an alternating
/// diagram one coloring makes all contributions positive.
fn build_form(
    d: &KnotDiagram,
    faces: &crate::pd::Faces,
    colors: &[u8],
    white: u8,
) -> Result<Option<Mat>> {
    let white_faces: Vec<usize> =
        (0..faces.n_faces).filter(|&f| colors[f] == white).collect();
    if white_faces.len() < 2 {
        return Ok(None);
    }
    let mut index = vec![usize::MAX; faces.n_faces];
    for (i, &f) in white_faces.iter().enumerate() {
        index[f] = i;
    }
    let r = white_faces.len();
    let mut g = vec![vec![BigInt::zero(); r]; r];
    for c in 0..d.n_crossings() {
        let parity = if colors[faces.face_of_corner[c][0]] == white { 0 } else { 1 };
        let i = index[faces.face_of_corner[c][parity]];
        let j = index[faces.face_of_corner[c][parity + 2]];
        if i == j {
            return Err(Error::UnreducedDiagram(c));
        }
        let s = if parity == POSITIVE_CORNER_PARITY { 1 } else { -1 };
        g[i][j] += s;
        g[j][i] += s;
        g[i][i] -= s;
        g[j][j] -= s;
    }
    // delete the last row and column
    g.pop();
    for row in &mut g {
        row.pop();
    }
    Ok(Some(g))
}

/// Determinants of the leading principal submatrices, or None if any
/// vanishes (fraction-free elimination; a zero pivot means a zero minor).
pub fn leading_principal_minors(m: &Mat) -> Option<Vec<BigInt>> {
    let n = m.len();
    let mut a: Mat = m.to_vec();
    let mut minors = Vec::with_capacity(n);
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            return None;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev; // exact by the fraction-free identity
            }
        }
        minors.push(a[k][k].clone());
        prev = a[k][k].clone();
    }
    Some(minors)
}

pub fn int_det(m: &Mat) -> BigInt {
    // general determinant with pivoting, for matrices that may have zero
    // leading minors
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.to_vec();
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    if sign < 0 { -a[n - 1][n - 1].clone() } else { a[n - 1][n - 1].clone() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pd::parse_pd;

    const TREFOIL: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";

    #[test]
    fn trefoil_form() {
        let d = parse_pd(TREFOIL).unwrap();
        let g = goeritz(&d).unwrap();
        assert_eq!(g.group_order(), BigInt::from(3));
        assert!(g.rank() == 1 || g.rank() == 2);
    }

    #[test]
    fn unknot_form_is_empty() {
        let g = goeritz(&crate::pd::KnotDiagram::unknot()).unwrap();
        assert_eq!(g.rank(), 0);
        assert_eq!(g.determinant, BigInt::one());
    }

    #[test]
    fn figure_eight_form() {
        // 4_1: X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)
        let d = parse_pd("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)").unwrap();
        let g = goeritz(&d).unwrap();
        assert_eq!(g.group_order(), BigInt::from(5));
    }

    #[test]
    fn granny_form_is_multiplicative() {
        let d = parse_pd(TREFOIL).unwrap();
        let s = crate::pd::KnotDiagram::connected_sum("granny", &[d.clone(), d]).unwrap();
        let g = goeritz(&s).unwrap();
        assert_eq!(g.group_order(), BigInt::from(9));
    }

    #[test]
    fn minors_of_definite_matrix() {
        let m: Mat = vec![
            vec![BigInt::from(-2), BigInt::from(1)],
            vec![BigInt::from(1), BigInt::from(-2)],
        ];
        let minors = leading_principal_minors(&m).unwrap();
        assert_eq!(minors, vec![BigInt::from(-2), BigInt::from(3)]);
        assert_eq!(int_det(&m), BigInt::from(3));
    }
}
