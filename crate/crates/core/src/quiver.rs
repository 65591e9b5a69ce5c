//! Numerics of the conifold quiver with a framing vertex `∞`.
//!
//! A representation has dimension vector `(v_inf, v0, v1)` with `v_inf` in `{0, 1}`.
//! Stability parameters `θ = (θ0, θ1)` pair with `(v0, v1)` by the dot product.

use alloc::vec::Vec;
use core::ops::{Add, Mul, Sub};

use crate::{Error, Result};

/// Dimension vector of a framed representation.
///
/// Fields are public so that sums and differences can be formed freely;
/// [`DimVec::new`] is the checked constructor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct DimVec {
    pub vinf: i64,
    pub v0: i64,
    pub v1: i64,
}

impl DimVec {
    pub fn new(vinf: i64, v0: i64, v1: i64) -> Result<Self> {
        if !(0..=1).contains(&vinf) {
            return Err(Error::InvalidFraming { value: vinf });
        }
        let v = DimVec { vinf, v0, v1 };
        v.check_nonnegative()?;
        Ok(v)
    }

    /// An unframed vector `(0, v0, v1)`.
    pub fn unframed(v0: i64, v1: i64) -> Self {
        DimVec { vinf: 0, v0, v1 }
    }

    pub fn framed(v0: i64, v1: i64) -> Self {
        DimVec { vinf: 1, v0, v1 }
    }

    pub fn check_nonnegative(&self) -> Result<()> {
        for (component, value) in [("vinf", self.vinf), ("v0", self.v0), ("v1", self.v1)] {
            if value < 0 {
                return Err(Error::NegativeDimension { component, value });
            }
        }
        Ok(())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.check_nonnegative().is_ok()
    }
}

impl Add for DimVec {
    type Output = DimVec;
    fn add(self, o: DimVec) -> DimVec {
        DimVec {
            vinf: self.vinf + o.vinf,
            v0: self.v0 + o.v0,
            v1: self.v1 + o.v1,
        }
    }
}

impl Sub for DimVec {
    type Output = DimVec;
    fn sub(self, o: DimVec) -> DimVec {
        DimVec {
            vinf: self.vinf - o.vinf,
            v0: self.v0 - o.v0,
            v1: self.v1 - o.v1,
        }
    }
}

impl Mul<DimVec> for i64 {
    type Output = DimVec;
    fn mul(self, v: DimVec) -> DimVec {
        DimVec {
            vinf: self * v.vinf,
            v0: self * v.v0,
            v1: self * v.v1,
        }
    }
}

/// `dim Hom(E, E') - dim Ext^1(E, E')` for representations of the framed quiver.
pub fn euler_form(e: &DimVec, f: &DimVec) -> i64 {
    e.vinf * f.vinf - e.vinf * f.v0 + e.v0 * f.v0 - 2 * e.v0 * f.v1 - 2 * e.v1 * f.v0 + e.v1 * f.v1
}

/// Dimension of the framed moduli space at `(1, v0, v1)`.
pub fn moduli_dim(v0: i64, v1: i64) -> i64 {
    v0 - v0 * v0 - v1 * v1 + 4 * v0 * v1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WallFamily {
    /// Rays `R_{>0}·(1-m, m)`.
    W,
    /// Rays `R_{>0}·(-m-1, m)`.
    WPrime,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Wall {
    pub family: WallFamily,
    pub m: i64,
}

impl Wall {
    pub fn new(family: WallFamily, m: i64) -> Result<Self> {
        if m < 1 {
            return Err(Error::InvalidWallIndex { m });
        }
        Ok(Wall { family, m })
    }

    /// Primitive integer direction of the ray.
    pub fn direction(&self) -> (i64, i64) {
        match self.family {
            WallFamily::W => (1 - self.m, self.m),
            WallFamily::WPrime => (-self.m - 1, self.m),
        }
    }

    /// Dimension vector of the representation that becomes strictly semistable here.
    pub fn stable_dimvec(&self) -> DimVec {
        match self.family {
            WallFamily::W => DimVec::unframed(self.m, self.m - 1),
            WallFamily::WPrime => DimVec::unframed(self.m, self.m + 1),
        }
    }

    /// `θ·v` for the direction `θ` of this wall.
    pub fn pairing(&self, v: &DimVec) -> i64 {
        let (t0, t1) = self.direction();
        t0 * v.v0 + t1 * v.v1
    }
}

pub fn stable_dimvec(wall: &Wall) -> DimVec {
    wall.stable_dimvec()
}

/// Dimension vector `(1, n, n - β)` of the stable pair moduli with charge `(β, n)`.
pub fn pt_dimvec(beta: i64, n: i64) -> Result<DimVec> {
    DimVec::new(1, n, n - beta)
}

/// Inverse of [`pt_dimvec`]: `(β, n) = (v0 - v1, v0)`.
pub fn pt_charge(v: &DimVec) -> (i64, i64) {
    (v.v0 - v.v1, v.v0)
}

/// Ext-quiver dimensions at a polystable point `R_inf ⊕ (V ⊗ S_m)` with `dim V = d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtQuiverData {
    /// Arrows from the framing vertex to the `S_m` vertex.
    pub a: i64,
    /// Arrows back to the framing vertex.
    pub b: i64,
    /// Loops at the `S_m` vertex, `2m² - 2m`.
    pub c: i64,
    /// The linear term `(m-2)v0 + (m+1)v1` shared by `a` and `b`.
    pub base: i64,
    /// Loops at the framing vertex; no closed form is known.
    pub loops_inf: Option<i64>,
    /// False when `a < d` or `b < 0`, outside the geometric range.
    pub valid: bool,
}

pub fn ext_quiver_data(v0: i64, v1: i64, m: i64, d: i64) -> Result<ExtQuiverData> {
    let wall = Wall::new(WallFamily::W, m)?;
    if d < 0 {
        return Err(Error::NegativeDimension {
            component: "d",
            value: d,
        });
    }
    let rest = DimVec::unframed(v0, v1) - d * wall.stable_dimvec();
    rest.check_nonnegative()?;
    let base = (m - 2) * v0 + (m + 1) * v1;
    let shift = d * (-2 * m * m + 2 * m + 1);
    let a = base + m + shift;
    let b = base + shift;
    Ok(ExtQuiverData {
        a,
        b,
        c: 2 * m * m - 2 * m,
        base,
        loops_inf: None,
        valid: a >= d && b >= 0,
    })
}

/// Walls `W_m` with `v - l·s_m >= 0` for some `l >= 1`, with the largest such `l`.
pub fn relevant_walls(v0: i64, v1: i64) -> Result<Vec<(Wall, i64)>> {
    DimVec::unframed(v0, v1).check_nonnegative()?;
    let mut out = Vec::new();
    for m in 1..=v0 {
        let l = max_multiple(v0, v1, m);
        if l >= 1 {
            out.push((
                Wall {
                    family: WallFamily::W,
                    m,
                },
                l,
            ));
        }
    }
    Ok(out)
}

/// Largest `l` with `(v0, v1) - l·(m, m-1) >= 0`.
pub(crate) fn max_multiple(v0: i64, v1: i64, m: i64) -> i64 {
    let by_v0 = v0 / m;
    if m == 1 {
        by_v0
    } else {
        by_v0.min(v1 / (m - 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(m: i64) -> Wall {
        Wall::new(WallFamily::W, m).unwrap()
    }

    #[test]
    fn stable_object_self_pairing() {
        let s = w(2).stable_dimvec();
        assert_eq!(euler_form(&s, &s), -3);
        assert_eq!(1 - euler_form(&s, &s), 4);
        assert_eq!(euler_form(&DimVec::default(), &DimVec::default()), 0);
    }

    #[test]
    fn loops_match_closed_form() {
        for m in 1..=20 {
            let s = w(m).stable_dimvec();
            assert_eq!(1 - euler_form(&s, &s), 2 * m * m - 2 * m, "m={m}");
        }
    }

    #[test]
    fn framed_self_pairing_is_moduli_dim() {
        for v0 in 0..=15 {
            for v1 in 0..=15 {
                let e = DimVec::framed(v0, v1);
                assert_eq!(1 - euler_form(&e, &e), moduli_dim(v0, v1));
            }
        }
    }

    #[test]
    fn moduli_dim_values_and_parity() {
        assert_eq!(moduli_dim(1, 0), 0);
        assert_eq!(moduli_dim(0, 0), 0);
        for v0 in 0..=50 {
            for v1 in 0..=50 {
                assert_eq!(moduli_dim(v0, v1).rem_euclid(2), v1 % 2);
            }
        }
    }

    #[test]
    fn stable_vectors() {
        assert_eq!(w(2).stable_dimvec(), DimVec::unframed(2, 1));
        assert_eq!(w(1).stable_dimvec(), DimVec::unframed(1, 0));
        let wp = Wall::new(WallFamily::WPrime, 3).unwrap();
        assert_eq!(stable_dimvec(&wp), DimVec::unframed(3, 4));
        assert_eq!(
            Wall::new(WallFamily::W, 0),
            Err(Error::InvalidWallIndex { m: 0 })
        );
    }

    #[test]
    fn walls_contain_their_stable_vector() {
        for m in 1..=30 {
            for family in [WallFamily::W, WallFamily::WPrime] {
                let wall = Wall::new(family, m).unwrap();
                assert_eq!(wall.pairing(&wall.stable_dimvec()), 0);
                let (x, y) = wall.direction();
                assert_eq!(gcd(x.abs(), y.abs()), 1);
            }
        }
    }

    fn gcd(a: i64, b: i64) -> i64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }

    #[test]
    fn pt_dictionary() {
        assert_eq!(pt_dimvec(1, 1).unwrap(), DimVec::framed(1, 0));
        assert_eq!(pt_dimvec(0, 0).unwrap(), DimVec::framed(0, 0));
        assert_eq!(
            pt_dimvec(3, 1),
            Err(Error::NegativeDimension {
                component: "v1",
                value: -2
            })
        );
        assert_eq!(
            pt_dimvec(0, -1),
            Err(Error::NegativeDimension {
                component: "v0",
                value: -1
            })
        );
    }

    #[test]
    fn ext_quiver_example() {
        let e = ext_quiver_data(4, 3, 2, 1).unwrap();
        assert_eq!((e.base, e.a, e.b, e.c), (9, 8, 6, 4));
        assert!(e.valid);
        assert_eq!(e.loops_inf, None);
    }

    #[test]
    fn ext_quiver_at_stable_vector() {
        for m in 1..=20 {
            let e = ext_quiver_data(m, m - 1, m, 1).unwrap();
            assert_eq!((e.a, e.b), (m, 0));
        }
    }

    #[test]
    fn ext_quiver_preconditions() {
        assert!(matches!(
            ext_quiver_data(3, 2, 2, 2),
            Err(Error::NegativeDimension { .. })
        ));
        assert_eq!(
            ext_quiver_data(3, 2, 0, 1),
            Err(Error::InvalidWallIndex { m: 0 })
        );
        assert!(ext_quiver_data(0, 0, 3, 0).is_ok());
    }

    #[test]
    fn relevant_walls_examples() {
        let got = relevant_walls(3, 2).unwrap();
        let expected = alloc::vec![(w(1), 3), (w(2), 1), (w(3), 1)];
        assert_eq!(got, expected);
        assert!(relevant_walls(0, 0).unwrap().is_empty());
        for m in 1..=10 {
            assert!(relevant_walls(m, m - 1).unwrap().contains(&(w(m), 1)));
        }
    }

    #[test]
    fn relevant_walls_brute_force() {
        for v0 in 0..=12 {
            for v1 in 0..=12 {
                let got = relevant_walls(v0, v1).unwrap();
                let mut expected = Vec::new();
                for m in 1..=20 {
                    let s = w(m).stable_dimvec();
                    let mut l = 0;
                    while (DimVec::unframed(v0, v1) - (l + 1) * s).is_nonnegative() {
                        l += 1;
                    }
                    if l > 0 {
                        expected.push((w(m), l));
                    }
                }
                assert_eq!(got, expected, "v=({v0},{v1})");
            }
        }
    }

    fn arb_vec() -> impl Strategy<Value = DimVec> {
        (-20i64..20, -20i64..20, -20i64..20).prop_map(|(vinf, v0, v1)| DimVec { vinf, v0, v1 })
    }

    proptest! {
        #[test]
        fn euler_form_is_bilinear(e in arb_vec(), f in arb_vec(), g in arb_vec(), k in -5i64..5) {
            prop_assert_eq!(euler_form(&(e + f), &g), euler_form(&e, &g) + euler_form(&f, &g));
            prop_assert_eq!(euler_form(&g, &(e + f)), euler_form(&g, &e) + euler_form(&g, &f));
            prop_assert_eq!(euler_form(&(k * e), &g), k * euler_form(&e, &g));
        }

        #[test]
        fn ext_quiver_gap_is_m(v0 in 0i64..200, v1 in 0i64..200, m in 1i64..=20, d in 0i64..10) {
            match ext_quiver_data(v0, v1, m, d) {
                Ok(e) => {
                    prop_assert_eq!(e.a - e.b, m);
                    prop_assert_eq!(e.c, 2 * m * m - 2 * m);
                }
                Err(_) => prop_assert!(v0 < d * m || v1 < d * (m - 1)),
            }
        }

        #[test]
        fn pt_round_trip(n in 0i64..1000, beta_frac in 0i64..=1000) {
            let beta = beta_frac % (n + 1);
            let v = pt_dimvec(beta, n).unwrap();
            prop_assert_eq!(pt_charge(&v), (beta, n));
        }
    }
}
