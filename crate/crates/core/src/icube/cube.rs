use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::IcubeError;
use crate::quaternion::Quat;

/// An integer vector of any dimension.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IVec(pub Vec<i64>);

impl IVec {
    pub fn new(entries: Vec<i64>) -> IVec {
        IVec(entries)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn dot(&self, other: &IVec) -> i128 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| i128::from(a) * i128::from(b))
            .sum()
    }

    pub fn norm(&self) -> i128 {
        self.dot(self)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// `(a, b, c, d) ↦ a + bi + cj + dk`; `None` unless the dimension is 4.
    pub fn to_quat(&self) -> Option<Quat> {
        match self.0[..] {
            [a, b, c, d] => Quat::checked_new(a, b, c, d),
            _ => None,
        }
    }

    /// Coefficient vector of a Lipschitz quaternion.
    pub fn from_quat(q: &Quat) -> Option<IVec> {
        q.coeffs().map(|c| IVec(c.to_vec()))
    }
}

impl From<[i64; 4]> for IVec {
    fn from(c: [i64; 4]) -> IVec {
        IVec(c.to_vec())
    }
}

impl fmt::Debug for IVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Checks the icube conditions on a list of vectors, reporting the first
/// violation.
pub fn validate_icube(vectors: &[IVec]) -> Result<(), IcubeError> {
    let Some(first) = vectors.first() else {
        return Err(IcubeError::Empty);
    };
    let n = first.dim();
    if n == 0 {
        return Err(IcubeError::Empty);
    }
    if let Some(i) = vectors.iter().position(|v| v.dim() != n) {
        return Err(IcubeError::DimensionMismatch {
            index: i,
            expected: n,
            found: vectors[i].dim(),
        });
    }
    if vectors.len() > n {
        return Err(IcubeError::TooManyVectors {
            m: vectors.len(),
            n,
        });
    }
    if let Some(i) = vectors.iter().position(IVec::is_zero) {
        return Err(IcubeError::ZeroVector(i));
    }
    let norm = first.norm();
    for i in 0..vectors.len() {
        for j in i + 1..vectors.len() {
            let (a, b) = (&vectors[i], &vectors[j]);
            if a.norm() != norm || b.norm() != norm || a.dot(b) != 0 {
                return Err(IcubeError::NotTwins(i, j));
            }
        }
    }
    Ok(())
}

/// An ordered system of `m` pairwise orthogonal nonzero vectors of equal
/// norm in `Z^n`, `1 <= m <= n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ICube {
    vectors: Vec<IVec>,
    edge_norm: u64,
}

impl ICube {
    pub fn new(vectors: Vec<IVec>) -> Result<ICube, IcubeError> {
        validate_icube(&vectors)?;
        let edge_norm = u64::try_from(vectors[0].norm()).map_err(|_| IcubeError::Overflow)?;
        Ok(ICube { vectors, edge_norm })
    }

    pub fn from_rows<const N: usize>(rows: &[[i64; N]]) -> Result<ICube, IcubeError> {
        ICube::new(rows.iter().map(|r| IVec(r.to_vec())).collect())
    }

    pub fn from_quats(qs: &[Quat]) -> Result<ICube, IcubeError> {
        let vs = qs
            .iter()
            .map(|q| IVec::from_quat(q).ok_or(IcubeError::NotLipschitz))
            .collect::<Result<Vec<_>, _>>()?;
        ICube::new(vs)
    }

    pub fn vectors(&self) -> &[IVec] {
        &self.vectors
    }

    pub fn into_vectors(self) -> Vec<IVec> {
        self.vectors
    }

    pub fn m(&self) -> usize {
        self.vectors.len()
    }

    pub fn n(&self) -> usize {
        self.vectors[0].dim()
    }

    pub fn edge_norm(&self) -> u64 {
        self.edge_norm
    }

    /// The vectors as quaternions; `None` unless `n == 4`.
    pub fn quats(&self) -> Option<Vec<Quat>> {
        self.vectors.iter().map(IVec::to_quat).collect()
    }

    pub(crate) fn require_z4(&self) -> Result<Vec<Quat>, IcubeError> {
        self.quats().ok_or(IcubeError::NotFourDimensional(self.n()))
    }

    /// gcd of all `m·n` entries.
    pub fn content(&self) -> u64 {
        let all: Vec<i64> = self
            .vectors
            .iter()
            .flat_map(|v| v.0.iter().copied())
            .collect();
        crate::quaternion::content(&all)
    }

    pub fn is_primitive(&self) -> bool {
        self.content() == 1
    }
}

impl fmt::Debug for ICube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.vectors).finish()
    }
}

/// Current interchange format version.
pub const FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct ICubeJson {
    v: u32,
    n: usize,
    m: usize,
    vectors: Vec<IVec>,
}

impl Serialize for ICube {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ICubeJson {
            v: FORMAT_VERSION,
            n: self.n(),
            m: self.m(),
            vectors: self.vectors.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ICube {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<ICube, D::Error> {
        use serde::de::Error;
        let j = ICubeJson::deserialize(de)?;
        if j.v != FORMAT_VERSION {
            return Err(D::Error::custom(format!(
                "unsupported format version {}",
                j.v
            )));
        }
        if j.m != j.vectors.len() {
            return Err(D::Error::custom(format!(
                "m = {} but {} vectors given",
                j.m,
                j.vectors.len()
            )));
        }
        if let Some(v) = j.vectors.iter().find(|v| v.dim() != j.n) {
            return Err(D::Error::custom(format!(
                "vector {v:?} has dimension != n = {}",
                j.n
            )));
        }
        ICube::new(j.vectors).map_err(D::Error::custom)
    }
}
