//! Shared exhaustive checks for the parity laws of Lipschitz and Hurwitz
//! quaternions. Coefficient boxes are wide enough to cover every residue of
//! the doubled coefficients mod 4 (and every coefficient residue mod 4).

#![allow(dead_code)]

use icube4_core::quaternion::{
    classify_sg, eta_parity_condition, is_primary, left_quotient, left_quotient_by_eta,
    right_quotient, units, Eta,
};
use icube4_core::{KElement, Quat};

pub struct Law {
    pub name: &'static str,
    pub checked: usize,
    pub violations: Vec<String>,
}

impl Law {
    fn new(name: &'static str) -> Law {
        Law {
            name,
            checked: 0,
            violations: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.violations.len() < 10 {
            self.violations.push(what());
        }
    }
}

/// Nonzero Lipschitz quaternions with coefficients in `-r..=r`.
pub fn lipschitz_box(r: i64) -> Vec<Quat> {
    let mut out = Vec::new();
    for a in -r..=r {
        for b in -r..=r {
            for c in -r..=r {
                for d in -r..=r {
                    let q = Quat::new(a, b, c, d);
                    if !q.is_zero() {
                        out.push(q);
                    }
                }
            }
        }
    }
    out
}

/// Nonzero Hurwitz quaternions with doubled coefficients in `-r..=r`.
pub fn hurwitz_box(r: i64) -> Vec<Quat> {
    let mut out = Vec::new();
    for a in -r..=r {
        for b in -r..=r {
            for c in -r..=r {
                for d in -r..=r {
                    if let Ok(q) = Quat::from_doubled([a, b, c, d]) {
                        if !q.is_zero() {
                            out.push(q);
                        }
                    }
                }
            }
        }
    }
    out
}

/// `S_g` straight from the definition: the unique position whose parity
/// differs from all the others.
pub fn sg_by_definition(q: &Quat) -> Option<KElement> {
    let c = q.coeffs()?;
    if q.norm().is_multiple_of(2) {
        return None;
    }
    let odd = |x: i64| x.rem_euclid(2);
    let hits: Vec<usize> = (0..4)
        .filter(|&g| (0..4).filter(|&h| h != g).all(|h| odd(c[g]) != odd(c[h])))
        .collect();
    (hits.len() == 1).then(|| KElement::from_index(hits[0]))
}

fn congruent_mod2_lipschitz(a: &Quat, b: &Quat) -> bool {
    match (*a - *b).coeffs() {
        Some(c) => c.iter().all(|x| x % 2 == 0),
        None => false,
    }
}

fn congruent_mod2_hurwitz(a: &Quat, b: &Quat) -> bool {
    (*a - *b).div_int(2).is_some()
}

fn eta_by_hand(c: [i64; 4], eta: Eta) -> bool {
    let even = |x: i64| x.rem_euclid(2) == 0;
    match eta {
        Eta::I => even(c[0] - c[1]) && even(c[2] - c[3]),
        Eta::J => even(c[0] - c[2]) && even(c[1] - c[3]),
        Eta::K => even(c[0] - c[3]) && even(c[1] - c[2]),
    }
}

pub fn parity_laws() -> Vec<Law> {
    let lip = lipschitz_box(4);
    let odd: Vec<Quat> = lipschitz_box(2)
        .into_iter()
        .filter(|q| q.norm() % 2 == 1)
        .collect();
    let hur = hurwitz_box(4);

    let mut two_one = Law::new("dyadic (1): (1+g)-divisibility iff parity pairing");
    let mut two_two = Law::new("dyadic (2): 8 | norm forces even coefficients");
    let mut two_three = Law::new("dyadic (3): norm = 4 mod 8 gives a (1+i) left factor");
    let mut two_four = Law::new("dyadic (4): norm = 2 mod 4 gives exactly one eta");
    for q in &lip {
        let c = q.coeffs().unwrap();
        for eta in Eta::ALL {
            let by_division = left_quotient_by_eta(q, eta).is_some();
            two_one.check(
                by_division == eta_by_hand(c, eta)
                    && by_division == eta_parity_condition(q, eta).unwrap(),
                || format!("{q} with {eta:?}"),
            );
        }
        let n = q.norm();
        if n % 8 == 0 {
            two_two.check(c.iter().all(|x| x % 2 == 0), || format!("{q}"));
        }
        if n % 8 == 4 {
            two_three.check(left_quotient_by_eta(q, Eta::I).is_some(), || format!("{q}"));
        }
        if n % 4 == 2 {
            let hits = Eta::ALL
                .iter()
                .filter(|&&e| left_quotient_by_eta(q, e).is_some())
                .count();
            two_four.check(hits == 1, || format!("{q}: {hits} etas"));
        }
    }

    let mut sg_one = Law::new("S_g (1): exactly one class; twins never share it");
    let mut sg_two = Law::new("S_g (2): norm = 1 mod 4 means congruent to g mod 2");
    let mut sg_three = Law::new("S_g (3): norm = 3 mod 4 means congruent to 2sigma - g mod 2");
    let two_sigma = Quat::new(1, 1, 1, 1);
    for q in &odd {
        let class = classify_sg(q).ok();
        sg_one.check(class.is_some() && class == sg_by_definition(q), || {
            format!("{q}")
        });
        let class = class.unwrap();
        for g in KElement::ALL {
            let target = if q.norm() % 4 == 1 {
                g.quat()
            } else {
                two_sigma - g.quat()
            };
            let (in_l, in_e) = (
                congruent_mod2_lipschitz(q, &target),
                congruent_mod2_hurwitz(q, &target),
            );
            let law = if q.norm() % 4 == 1 {
                &mut sg_two
            } else {
                &mut sg_three
            };
            law.check(in_l == (class == g) && in_e == (class == g), || {
                format!("{q} vs {g}")
            });
        }
    }
    for a in &odd {
        for b in &odd {
            if a.norm() == b.norm() && a.conj() * *b == -(b.conj() * *a) {
                sg_one.check(classify_sg(a).unwrap() != classify_sg(b).unwrap(), || {
                    format!("twins {a}, {b}")
                });
            }
        }
    }

    let mut sg_four = Law::new("S_g (4): S_g times S_h lies in S_(g*h)");
    for a in &odd {
        for b in &odd {
            let (g, h) = (classify_sg(a).unwrap(), classify_sg(b).unwrap());
            sg_four.check(classify_sg(&(*a * *b)).ok() == Some(g.klein(h)), || {
                format!("{a} * {b}")
            });
        }
    }

    let mut sg_five = Law::new("S_g (5): multiplying by S_1 keeps the class");
    let s1: Vec<&Quat> = odd
        .iter()
        .filter(|q| classify_sg(q).unwrap() == KElement::One)
        .collect();
    for a in &s1 {
        for g in &hur {
            let c = sg_by_definition(g);
            sg_five.check(
                sg_by_definition(&(**a * *g)) == c && sg_by_definition(&(*g * **a)) == c,
                || format!("{a}, {g}"),
            );
        }
    }

    let mut pr_one = Law::new("primary (1): one primary left and right associate");
    let mut pr_two = Law::new("primary (2): primaries closed under products and quotients");
    let mut pr_three = Law::new("primary (3): unit times primary is Lipschitz iff unit in Q");
    for g in hur.iter().filter(|q| q.norm() % 2 == 1) {
        let left = units()
            .iter()
            .filter(|u| is_primary(&(u.value() * *g)))
            .count();
        let right = units()
            .iter()
            .filter(|u| is_primary(&(*g * u.value())))
            .count();
        pr_one.check(left == 1 && right == 1, || {
            format!("{g}: {left} left, {right} right")
        });
    }
    let primaries: Vec<&Quat> = odd.iter().filter(|q| is_primary(q)).collect();
    for a in &primaries {
        for b in &primaries {
            let p = **a * **b;
            pr_two.check(is_primary(&p), || format!("{a} * {b}"));
            if let Some(x) = left_quotient(a, b) {
                pr_two.check(is_primary(&x), || format!("{b} \\ {a}"));
            }
            if let Some(x) = right_quotient(a, b) {
                pr_two.check(is_primary(&x), || format!("{a} / {b}"));
            }
        }
        for u in units() {
            let lip = u.value() * **a;
            let lip_r = **a * u.value();
            pr_three.check(
                lip.is_lipschitz() == u.is_lipschitz() && lip_r.is_lipschitz() == u.is_lipschitz(),
                || format!("{} with {a}", u.value()),
            );
        }
    }

    vec![
        two_one, two_two, two_three, two_four, sg_one, sg_two, sg_three, sg_four, sg_five, pr_one,
        pr_two, pr_three,
    ]
}
