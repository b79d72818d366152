//! Types of odd-norm icubes and the coordinate permutations that make them
//! orderly.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{ICube, IVec, IcubeError};
use crate::quaternion::{classify_sg, KElement, Quat, QuatError};

/// The `S_g` classes of the members of an odd-norm icube, in order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TypeSig(Vec<KElement>);

impl TypeSig {
    pub fn new(classes: Vec<KElement>) -> Result<TypeSig, IcubeError> {
        for (i, g) in classes.iter().enumerate() {
            if classes[..i].contains(g) {
                return Err(IcubeError::RepeatedType(*g));
            }
        }
        Ok(TypeSig(classes))
    }

    pub fn classes(&self) -> &[KElement] {
        &self.0
    }

    /// A prefix of `(1, i, j, k)`.
    pub fn is_orderly(&self) -> bool {
        self.0.iter().zip(KElement::ALL).all(|(a, b)| *a == b)
    }
}

impl fmt::Display for TypeSig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A permutation `r` of `K`, given by the images of `(1, i, j, k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "[KElement; 4]", into = "[KElement; 4]")]
pub struct KPerm([KElement; 4]);

impl KPerm {
    pub const IDENTITY: KPerm = KPerm(KElement::ALL);

    pub fn new(images: [KElement; 4]) -> Result<KPerm, IcubeError> {
        let mut seen = [false; 4];
        for g in images {
            if std::mem::replace(&mut seen[g.index()], true) {
                return Err(IcubeError::NotAPermutation);
            }
        }
        Ok(KPerm(images))
    }

    pub fn image(&self, g: KElement) -> KElement {
        self.0[g.index()]
    }

    pub fn images(&self) -> [KElement; 4] {
        self.0
    }

    pub fn inverse(&self) -> KPerm {
        let mut inv = KElement::ALL;
        for g in KElement::ALL {
            inv[self.image(g).index()] = g;
        }
        KPerm(inv)
    }

    /// `a_1 + a_i i + … ↦ a_{r(1)} + a_{r(i)} i + …`.
    pub fn apply(&self, v: &[i64; 4]) -> [i64; 4] {
        std::array::from_fn(|h| v[self.0[h].index()])
    }

    pub fn apply_quat(&self, q: &Quat) -> Quat {
        let d = q.doubled();
        Quat::from_doubled(std::array::from_fn(|h| d[self.0[h].index()])).unwrap()
    }
}

impl TryFrom<[KElement; 4]> for KPerm {
    type Error = IcubeError;
    fn try_from(images: [KElement; 4]) -> Result<KPerm, IcubeError> {
        KPerm::new(images)
    }
}

impl From<KPerm> for [KElement; 4] {
    fn from(p: KPerm) -> [KElement; 4] {
        p.0
    }
}

pub fn icube_type(c: &ICube) -> Result<TypeSig, IcubeError> {
    let qs = c.require_z4()?;
    if c.edge_norm().is_multiple_of(2) {
        return Err(IcubeError::EvenNorm);
    }
    let classes = qs
        .iter()
        .map(classify_sg)
        .collect::<Result<Vec<_>, QuatError>>()
        .map_err(IcubeError::Quat)?;
    TypeSig::new(classes)
}

/// Rearranges the coordinates of every vector by `r`.
pub fn permute_components(c: &ICube, r: &KPerm) -> Result<ICube, IcubeError> {
    let qs = c.require_z4()?;
    let vs = qs
        .iter()
        .map(|q| IVec::from(r.apply(&q.coeffs().unwrap())))
        .collect();
    ICube::new(vs)
}

/// The permutation taking `c` to orderly type, and the permuted icube.
///
/// `r` maps the ℓ-th orderly class to the ℓ-th class of the type; unused
/// positions are filled by the remaining elements of `K` in increasing order,
/// which makes `r` the least such permutation in lexicographic order.
pub fn to_orderly(c: &ICube) -> Result<(KPerm, ICube), IcubeError> {
    let ty = icube_type(c)?;
    let mut images = KElement::ALL;
    let mut rest = KElement::ALL
        .into_iter()
        .filter(|g| !ty.classes().contains(g));
    for (h, slot) in images.iter_mut().enumerate() {
        *slot = match ty.classes().get(h) {
            Some(&g) => g,
            None => rest.next().unwrap(),
        };
    }
    let r = KPerm::new(images)?;
    let out = permute_components(c, &r)?;
    debug_assert!(icube_type(&out).is_ok_and(|t| t.is_orderly()));
    Ok((r, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use KElement::*;

    fn cube(rows: &[[i64; 4]]) -> ICube {
        ICube::from_rows(rows).unwrap()
    }

    #[test]
    fn type_examples() {
        let c = cube(&[[1, 0, 0, 0], [0, 1, 0, 0]]);
        assert_eq!(icube_type(&c).unwrap().classes(), &[One, I]);
        let c = cube(&[[0, -1, -1, -1], [1, 0, -1, 1]]);
        assert_eq!(icube_type(&c).unwrap().classes(), &[One, I]);
        let c = cube(&[[1, 1, 0, 0]]);
        assert_eq!(icube_type(&c).unwrap_err(), IcubeError::EvenNorm);
    }

    #[test]
    fn permutation_moves_type() {
        let c = cube(&[[1, 0, 0, 0], [0, 1, 0, 0]]);
        let swap_ij = KPerm::new([One, J, I, K]).unwrap();
        let p = permute_components(&c, &swap_ij).unwrap();
        assert_eq!(icube_type(&p).unwrap().classes(), &[One, J]);
        assert_eq!(permute_components(&p, &swap_ij).unwrap(), c);
        assert_eq!(permute_components(&c, &KPerm::IDENTITY).unwrap(), c);
    }

    #[test]
    fn orderly_normalization() {
        let c = cube(&[[1, 2, 0, 0], [2, -1, 0, 0]]);
        let (r, o) = to_orderly(&c).unwrap();
        assert_eq!(r, KPerm::IDENTITY);
        assert_eq!(o, c);

        let c = cube(&[[2, 1, 0, 0], [1, -2, 0, 0]]);
        assert_eq!(icube_type(&c).unwrap().classes(), &[I, One]);
        let (r, o) = to_orderly(&c).unwrap();
        assert_eq!(r, KPerm::new([I, One, J, K]).unwrap());
        assert!(icube_type(&o).unwrap().is_orderly());
        assert_eq!(permute_components(&o, &r.inverse()).unwrap(), c);
    }

    #[test]
    fn perm_rejects_repeats() {
        assert_eq!(
            KPerm::new([One, One, J, K]),
            Err(IcubeError::NotAPermutation)
        );
        assert!(serde_json::from_str::<KPerm>(r#"["1","1","j","k"]"#).is_err());
        assert_eq!(
            serde_json::to_string(&KPerm::IDENTITY).unwrap(),
            r#"["1","i","j","k"]"#
        );
    }

    #[test]
    fn every_type_normalizes() {
        // all 24 permutations applied to the orderly 4-icube (1, i, j, k)
        let base = cube(&[[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]);
        let mut count = 0;
        for a in KElement::ALL {
            for b in KElement::ALL {
                for c in KElement::ALL {
                    for d in KElement::ALL {
                        let Ok(r) = KPerm::new([a, b, c, d]) else {
                            continue;
                        };
                        count += 1;
                        let p = permute_components(&base, &r).unwrap();
                        let (s, o) = to_orderly(&p).unwrap();
                        assert_eq!(o, base);
                        assert_eq!(permute_components(&o, &s.inverse()).unwrap(), p);
                    }
                }
            }
        }
        assert_eq!(count, 24);
    }
}
