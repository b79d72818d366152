use super::{ICube, IcubeError};
use crate::quaternion::{dyadic_prefix, factor_dyadic, Eta, Quat};

/// An icube of edge norm `2^power · D` (`D` odd) written as
/// `(1+i)^(power-1) · η · C'` with `C'` of edge norm `D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DyadicReduction {
    pub power: u32,
    pub eta: Option<Eta>,
    pub reduced: ICube,
}

/// Strips the common dyadic left factor shared by every member.
pub fn reduce_dyadic(c: &ICube) -> Result<DyadicReduction, IcubeError> {
    let qs = c.require_z4()?;
    let factors = qs
        .iter()
        .map(factor_dyadic)
        .collect::<Result<Vec<_>, _>>()
        .map_err(IcubeError::Quat)?;
    let (power, eta) = (factors[0].power, factors[0].eta);
    if factors.iter().any(|f| f.power != power || f.eta != eta) {
        return Err(IcubeError::Internal(
            "members do not share a dyadic factor".into(),
        ));
    }
    let rest: Vec<Quat> = factors.iter().map(|f| f.rest).collect();
    Ok(DyadicReduction {
        power,
        eta,
        reduced: ICube::from_quats(&rest)?,
    })
}

/// Multiplies every member on the left by `(1+i)^(power-1) · η`.
pub fn lift_dyadic(c: &ICube, power: u32, eta: Option<Eta>) -> Result<ICube, IcubeError> {
    if eta.is_some() != (power >= 1) {
        return Err(IcubeError::InconsistentCertificate(
            "eta must be present exactly when the dyadic power is positive".into(),
        ));
    }
    let prefix = dyadic_prefix(power, eta);
    let qs: Vec<Quat> = c
        .require_z4()?
        .iter()
        .map(|q| prefix.checked_mul(q).ok_or(IcubeError::Overflow))
        .collect::<Result<_, _>>()?;
    ICube::from_quats(&qs)
}
