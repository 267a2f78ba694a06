//! Sheet classification: every sheet of `gl_n`, the five sheets of `sp_4`,
//! the Dixmier sheets attached to maximal Levi subgroups of `SO_n` and
//! `Sp_2m`, and the `B_3` Levi sheet of `F_4`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{AtlasError, Result};
use crate::partitions::{is_valid_orbit_partition, Partition};

/// Connected reductive groups in scope. `A(n)` is `GL_n` (not `SL_n`), so
/// its parameter is the size of matrices rather than the semisimple rank.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(tag = "family", content = "rank")]
pub enum GroupKind {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    F4,
}

impl GroupKind {
    /// Builds a kind from a family letter, rejecting degenerate ranks.
    pub fn new(family: &str, rank: Option<usize>) -> Result<Self> {
        let need_rank = || {
            rank.ok_or_else(|| AtlasError::Parse(format!("family {family} needs a rank")))
        };
        let kind = match family.to_ascii_uppercase().as_str() {
            "A" | "GL" => GroupKind::A(need_rank()?),
            "B" => GroupKind::B(need_rank()?),
            "C" => GroupKind::C(need_rank()?),
            "D" => GroupKind::D(need_rank()?),
            "F4" => GroupKind::F4,
            other => return Err(AtlasError::Parse(format!("unknown group family {other:?}"))),
        };
        kind.validate()?;
        Ok(kind)
    }

    pub fn validate(self) -> Result<()> {
        let ok = match self {
            GroupKind::A(n) => n >= 1,
            GroupKind::B(r) | GroupKind::C(r) => r >= 1,
            GroupKind::D(r) => r >= 2,
            GroupKind::F4 => true,
        };
        if ok {
            Ok(())
        } else {
            Err(AtlasError::OutOfRange {
                what: "rank",
                detail: format!("{self:?}"),
            })
        }
    }

    /// Dimension of the defining representation; `None` for `F4`.
    pub fn natural_dim(self) -> Option<usize> {
        match self {
            GroupKind::A(n) => Some(n),
            GroupKind::B(r) => Some(2 * r + 1),
            GroupKind::C(r) | GroupKind::D(r) => Some(2 * r),
            GroupKind::F4 => None,
        }
    }

    pub fn dim_g(self) -> usize {
        match self {
            GroupKind::A(n) => n * n,
            GroupKind::B(r) | GroupKind::C(r) => r * (2 * r + 1),
            GroupKind::D(r) => r * (2 * r - 1),
            GroupKind::F4 => 52,
        }
    }

    /// Dimension of a maximal torus.
    pub fn rank(self) -> usize {
        match self {
            GroupKind::A(n) => n,
            GroupKind::B(r) | GroupKind::C(r) | GroupKind::D(r) => r,
            GroupKind::F4 => 4,
        }
    }

    /// Degrees of the basic invariant polynomials.
    pub fn invariant_degrees(self) -> Vec<usize> {
        match self {
            GroupKind::A(n) => (1..=n).collect(),
            GroupKind::B(r) | GroupKind::C(r) => (1..=r).map(|i| 2 * i).collect(),
            GroupKind::D(r) => {
                let mut d: Vec<usize> = (1..r).map(|i| 2 * i).collect();
                d.push(r);
                d.sort_unstable();
                d
            }
            GroupKind::F4 => vec![2, 6, 8, 12],
        }
    }

    /// Order of the Weyl group.
    pub fn weyl_order(self) -> GroupOrder {
        let fact = |k: usize| GroupOrder::factorial(k).0;
        let two_pow = |k: usize| BigUint::from(2u32).pow(k as u32);
        GroupOrder(match self {
            GroupKind::A(n) => fact(n),
            GroupKind::B(r) | GroupKind::C(r) => two_pow(r) * fact(r),
            GroupKind::D(r) => two_pow(r - 1) * fact(r),
            GroupKind::F4 => BigUint::from(1152u32),
        })
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GroupKind::A(n) => write!(f, "GL{n}"),
            GroupKind::B(r) => write!(f, "SO{}", 2 * r + 1),
            GroupKind::C(r) => write!(f, "Sp{}", 2 * r),
            GroupKind::D(r) => write!(f, "SO{}", 2 * r),
            GroupKind::F4 => f.write_str("F4"),
        }
    }
}

/// Levi subgroup in the decomposition data of a sheet, up to conjugacy.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(tag = "levi", rename_all = "snake_case")]
pub enum LeviLabel {
    /// `GL_{m_1} x ... x GL_{m_r}` inside `GL_n`.
    Gl { m: Partition },
    /// `GL_a x Sp_{2p}` (residual `p`) or `GL_a x SO_q` (residual `q`).
    MaxLevi { a: usize, residual: usize },
    /// A maximal torus.
    Torus,
    /// The whole group.
    Whole,
    /// The Levi of type `B_3` in `F_4`.
    F4B3,
}

impl LeviLabel {
    /// Parses `"2,1,1"` (type A), `"a,residual"` (B/C/D), `"torus"`,
    /// `"whole"` or `"B3"` (F4).
    pub fn parse(kind: GroupKind, s: &str) -> Result<Self> {
        let s = s.trim();
        let label = match s.to_ascii_lowercase().as_str() {
            "torus" => LeviLabel::Torus,
            "whole" | "g" => LeviLabel::Whole,
            "b3" => LeviLabel::F4B3,
            _ => {
                let nums = s
                    .trim_matches(|c| c == '(' || c == ')')
                    .split([',', ';'])
                    .map(|t| {
                        t.trim()
                            .parse::<usize>()
                            .map_err(|_| AtlasError::Parse(format!("bad Levi label {s:?}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                match kind {
                    GroupKind::A(_) => LeviLabel::Gl {
                        m: Partition::new(nums)?,
                    },
                    GroupKind::F4 => {
                        return Err(AtlasError::InvalidLevi(format!(
                            "F4 only supports the B3 Levi, got {s:?}"
                        )))
                    }
                    _ => match nums[..] {
                        [a, residual] => LeviLabel::MaxLevi { a, residual },
                        _ => {
                            return Err(AtlasError::Parse(format!(
                                "expected \"a,residual\", got {s:?}"
                            )))
                        }
                    },
                }
            }
        };
        label.validate(kind)?;
        Ok(label)
    }

    /// Checks that the label describes a Levi subgroup of `kind`.
    pub fn validate(&self, kind: GroupKind) -> Result<()> {
        kind.validate()?;
        let bad = |why: String| Err(AtlasError::InvalidLevi(format!("{self} in {kind}: {why}")));
        match (self, kind) {
            (LeviLabel::Gl { m }, GroupKind::A(n)) => {
                if m.n() != n {
                    return bad(format!("parts sum to {}", m.n()));
                }
            }
            (LeviLabel::MaxLevi { a, residual }, GroupKind::B(_) | GroupKind::C(_) | GroupKind::D(_)) => {
                let n = kind.natural_dim().unwrap();
                if *a == 0 {
                    return bad("a must be positive".into());
                }
                let size = match kind {
                    GroupKind::C(_) => 2 * (a + residual),
                    _ => 2 * a + residual,
                };
                if size != n {
                    return bad(format!("block sizes give dimension {size}, not {n}"));
                }
                if matches!(kind, GroupKind::D(_)) && *residual == 2 {
                    return bad("GL_a x SO_2 is not a maximal Levi".into());
                }
            }
            (LeviLabel::Torus | LeviLabel::Whole, GroupKind::F4) => {
                return bad("only the B3 Levi is supported for F4".into())
            }
            (LeviLabel::Torus | LeviLabel::Whole, _) => {}
            (LeviLabel::F4B3, GroupKind::F4) => {}
            _ => return bad("label does not match the group family".into()),
        }
        Ok(())
    }

    /// Dimension of the Levi subgroup.
    pub fn dim(&self, kind: GroupKind) -> Result<usize> {
        self.validate(kind)?;
        Ok(match (self, kind) {
            (LeviLabel::Gl { m }, _) => m.sum_of_squares(),
            (LeviLabel::MaxLevi { a, residual: p }, GroupKind::C(_)) => a * a + p * (2 * p + 1),
            (LeviLabel::MaxLevi { a, residual: q }, _) => a * a + q * q.saturating_sub(1) / 2,
            (LeviLabel::Torus, _) => kind.rank(),
            (LeviLabel::Whole, _) => kind.dim_g(),
            (LeviLabel::F4B3, _) => 22,
        })
    }
}

impl fmt::Display for LeviLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LeviLabel::Gl { m } => write!(f, "{m}"),
            LeviLabel::MaxLevi { a, residual } => write!(f, "({a};{residual})"),
            LeviLabel::Torus => f.write_str("torus"),
            LeviLabel::Whole => f.write_str("whole"),
            LeviLabel::F4B3 => f.write_str("B3"),
        }
    }
}

/// The nilpotent orbit in the closure of a sheet: a Jordan type for
/// classical groups, a Bala-Carter label otherwise.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum NilpotentOrbit {
    Partition(Partition),
    BalaCarter(String),
}

impl NilpotentOrbit {
    pub fn partition(&self) -> Option<&Partition> {
        match self {
            NilpotentOrbit::Partition(p) => Some(p),
            NilpotentOrbit::BalaCarter(_) => None,
        }
    }
}

impl fmt::Display for NilpotentOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NilpotentOrbit::Partition(p) => write!(f, "{p}"),
            NilpotentOrbit::BalaCarter(s) => f.write_str(s),
        }
    }
}

/// Order of a finite group. Weyl groups of `gl_n` overflow 64 bits for
/// `n > 20`; such orders serialize as decimal strings.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct GroupOrder(BigUint);

impl GroupOrder {
    pub fn new(n: u64) -> Self {
        GroupOrder(BigUint::from(n))
    }

    /// Fails on zero, which is not the order of a group.
    pub fn from_biguint(n: BigUint) -> Self {
        assert!(n != BigUint::ZERO, "group orders are positive");
        GroupOrder(n)
    }

    pub fn factorial(n: usize) -> Self {
        GroupOrder((1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k)))
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn divides(&self, other: &GroupOrder) -> bool {
        (&other.0 % &self.0) == BigUint::ZERO
    }

    /// `self / other`, failing unless the division is exact.
    pub fn quotient(&self, other: &GroupOrder) -> Option<GroupOrder> {
        other.divides(self).then(|| GroupOrder(&self.0 / &other.0))
    }
}

impl From<u64> for GroupOrder {
    fn from(n: u64) -> Self {
        GroupOrder::new(n)
    }
}

impl std::ops::Mul for &GroupOrder {
    type Output = GroupOrder;
    fn mul(self, rhs: &GroupOrder) -> GroupOrder {
        GroupOrder(&self.0 * &rhs.0)
    }
}

impl fmt::Display for GroupOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for GroupOrder {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.to_u64() {
            Some(n) => s.serialize_u64(n),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for GroupOrder {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct OrderVisitor;
        impl Visitor<'_> for OrderVisitor {
            type Value = GroupOrder;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a positive integer or a decimal string")
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<GroupOrder, E> {
                if v == 0 {
                    return Err(E::custom("group order must be positive"));
                }
                Ok(GroupOrder::new(v))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<GroupOrder, E> {
                let n: BigUint = v
                    .parse()
                    .map_err(|_| E::custom(format!("bad group order {v:?}")))?;
                if n == BigUint::ZERO {
                    return Err(E::custom("group order must be positive"));
                }
                Ok(GroupOrder(n))
            }
        }
        d.deserialize_any(OrderVisitor)
    }
}

/// Rows of the maximal-Levi summary table.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LeviClass {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
    VIII,
    IX,
}

impl LeviClass {
    pub const ALL: [LeviClass; 9] = [
        LeviClass::I,
        LeviClass::II,
        LeviClass::III,
        LeviClass::IV,
        LeviClass::V,
        LeviClass::VI,
        LeviClass::VII,
        LeviClass::VIII,
        LeviClass::IX,
    ];

    pub fn number(self) -> usize {
        self as usize + 1
    }

    /// `|F|` for sheets of this class.
    pub fn katsylo_order(self) -> u64 {
        match self {
            LeviClass::III | LeviClass::VIII => 2,
            _ => 1,
        }
    }

    /// `|W_L|` for sheets of this class.
    pub fn w_l_order(self) -> u64 {
        match self {
            LeviClass::II | LeviClass::VI => 1,
            _ => 2,
        }
    }

    pub fn ramification_type(self) -> RamificationType {
        match self {
            LeviClass::II | LeviClass::III | LeviClass::VI | LeviClass::VIII => {
                RamificationType::Type1
            }
            _ => RamificationType::Type2,
        }
    }
}

impl fmt::Display for LeviClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Type 1: the nontrivial element of `W_L` acts on the centre of `l` but
/// `e` admits a centralising `h'` with nonzero abelianisation. Type 2: the
/// rest.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum RamificationType {
    Type1,
    Type2,
}

/// Invariants of one sheet.
///
/// `rigid_orbit` is the rigid orbit of the decomposition data when it is
/// nonzero; Dixmier sheets have `None`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SheetDescriptor {
    pub kind: GroupKind,
    pub label: Option<String>,
    pub levi: LeviLabel,
    pub rigid_orbit: Option<Partition>,
    pub dixmier: bool,
    pub nilpotent_orbit: NilpotentOrbit,
    pub d: usize,
    pub dim_z: usize,
    pub w_l_order: GroupOrder,
    pub katsylo_order: u64,
    pub w_s_order: GroupOrder,
    pub dim_sheet: usize,
    pub class_tag: Option<LeviClass>,
    pub type_tag: Option<RamificationType>,
    pub component_group_order: Option<u64>,
    pub conjugate_only_under_o: bool,
}

impl SheetDescriptor {
    /// Short identifier such as `GL4:(2,1,1)`, `SO5:(2;1)` or `Sp4:S_Dix`.
    pub fn id(&self) -> String {
        match &self.label {
            Some(l) => format!("{}:{l}", self.kind),
            None => format!("{}:{}", self.kind, self.levi),
        }
    }

    /// Checks the structural identities every descriptor satisfies.
    pub fn check_invariants(&self) -> Result<()> {
        let fail = |why: String| Err(AtlasError::Verification(format!("{}: {why}", self.id())));
        let f = GroupOrder::new(self.katsylo_order);
        if &f * &self.w_s_order != self.w_l_order {
            return fail(format!(
                "|F| |W_S| = {} * {} but |W_L| = {}",
                f, self.w_s_order, self.w_l_order
            ));
        }
        if self.dixmier && self.d != self.levi.dim(self.kind)? {
            return fail(format!("d = {} differs from dim L", self.d));
        }
        if self.dim_sheet + self.d != self.kind.dim_g() + self.dim_z {
            return fail(format!("dim S = {} is not dim g - d + dim z", self.dim_sheet));
        }
        if let NilpotentOrbit::Partition(p) = &self.nilpotent_orbit {
            if !is_valid_orbit_partition(self.kind, p)? {
                return fail(format!("{p} is not a nilpotent Jordan type"));
            }
            if orbit_dimension(self.kind, p)? + self.d != self.kind.dim_g() {
                return fail(format!("orbit {p} does not have centraliser dimension d"));
            }
        }
        Ok(())
    }
}

/// Dimension of the nilpotent orbit with Jordan type `p`, from the closed
/// forms for centralisers: `sum (p*_i)^2` in `gl_n`, and half of it plus or
/// minus half the number of odd parts in `sp` and `so`.
pub fn orbit_dimension(kind: GroupKind, p: &Partition) -> Result<usize> {
    if !is_valid_orbit_partition(kind, p)? {
        return Err(AtlasError::InvalidPartition(format!(
            "{p} is not a nilpotent Jordan type in {kind}"
        )));
    }
    let squares = p.conjugate().sum_of_squares();
    let odd = p.parts().iter().filter(|&&k| k % 2 == 1).count();
    let centraliser = match kind {
        GroupKind::A(_) => squares,
        GroupKind::C(_) => (squares + odd) / 2,
        GroupKind::B(_) | GroupKind::D(_) => (squares - odd) / 2,
        GroupKind::F4 => unreachable!("rejected by the parity check"),
    };
    Ok(kind.dim_g() - centraliser)
}

const MAX_GL_N: usize = 40;

/// The sheet of `gl_n` with Levi `GL_{m_1} x ... x GL_{m_r}`.
pub fn gln_sheet(m: &Partition) -> Result<SheetDescriptor> {
    let n = m.n();
    if !(1..=MAX_GL_N).contains(&n) {
        return Err(AtlasError::OutOfRange {
            what: "n",
            detail: format!("{n} not in 1..={MAX_GL_N}"),
        });
    }
    let d = m.sum_of_squares();
    let w_l = m
        .profile()
        .iter()
        .fold(GroupOrder::new(1), |acc, (_, l)| &acc * &GroupOrder::factorial(l));
    let class = match m.parts() {
        [m1, m2] if m1 == m2 => Some(LeviClass::I),
        [_, _] => Some(LeviClass::II),
        _ => None,
    };
    Ok(SheetDescriptor {
        kind: GroupKind::A(n),
        label: None,
        levi: LeviLabel::Gl { m: m.clone() },
        rigid_orbit: None,
        dixmier: true,
        nilpotent_orbit: NilpotentOrbit::Partition(m.conjugate()),
        d,
        dim_z: m.len(),
        w_s_order: w_l.clone(),
        w_l_order: w_l,
        katsylo_order: 1,
        dim_sheet: n * n - d + m.len(),
        class_tag: class,
        type_tag: class.map(LeviClass::ramification_type),
        component_group_order: Some(1),
        conjugate_only_under_o: false,
    })
}

/// All sheets of `gl_n`, one per partition, in reverse-lexicographic order.
pub fn enumerate_sheets_gln(n: usize) -> Result<Vec<SheetDescriptor>> {
    if !(1..=MAX_GL_N).contains(&n) {
        return Err(AtlasError::OutOfRange {
            what: "n",
            detail: format!("{n} not in 1..={MAX_GL_N}"),
        });
    }
    Partition::all(n).iter().map(gln_sheet).collect()
}

/// Row names of the `Sp_4` table, in order.
pub const SP4_ROWS: [&str; 5] = ["reg", "S_Dix", "S'_Dix", "O_min", "0"];

/// The five sheets of `sp_4`.
pub fn sheets_sp4() -> Vec<SheetDescriptor> {
    let kind = GroupKind::C(2);
    let orbit = |parts: &[usize]| {
        NilpotentOrbit::Partition(Partition::new(parts.to_vec()).expect("valid partition"))
    };
    let row = |label: &str,
               levi: LeviLabel,
               rigid: Option<&[usize]>,
               nil: &[usize],
               d: usize,
               dim_z: usize,
               w_l: u64,
               f: u64| SheetDescriptor {
        kind,
        label: Some(label.to_string()),
        levi,
        rigid_orbit: rigid.map(|r| Partition::new(r.to_vec()).expect("valid partition")),
        dixmier: rigid.is_none(),
        nilpotent_orbit: orbit(nil),
        d,
        dim_z,
        w_l_order: GroupOrder::new(w_l),
        katsylo_order: f,
        w_s_order: GroupOrder::new(w_l / f),
        dim_sheet: kind.dim_g() - d + dim_z,
        class_tag: None,
        type_tag: None,
        component_group_order: None,
        conjugate_only_under_o: false,
    };
    let mut rows = vec![
        row("reg", LeviLabel::Torus, None, &[4], 2, 2, 8, 1),
        row("S_Dix", LeviLabel::MaxLevi { a: 1, residual: 1 }, None, &[2, 2], 4, 1, 2, 2),
        row("S'_Dix", LeviLabel::MaxLevi { a: 2, residual: 0 }, None, &[2, 2], 4, 1, 2, 1),
        row("O_min", LeviLabel::Whole, Some(&[2, 1, 1]), &[2, 1, 1], 6, 0, 1, 1),
        row("0", LeviLabel::Whole, None, &[1, 1, 1, 1], 10, 0, 1, 1),
    ];
    rows[1].class_tag = Some(LeviClass::VIII);
    rows[1].type_tag = Some(RamificationType::Type1);
    rows[1].component_group_order = Some(2);
    rows[2].class_tag = Some(LeviClass::VII);
    rows[2].type_tag = Some(RamificationType::Type2);
    rows
}

/// One row of [`sheets_sp4`] by name.
pub fn sp4_row(name: &str) -> Option<SheetDescriptor> {
    sheets_sp4()
        .into_iter()
        .find(|s| s.label.as_deref() == Some(name))
}

/// Class of a two-part `GL` label or a maximal Levi of `SO_n`/`Sp_2m`.
pub fn classify_maximal_levi(kind: GroupKind, levi: &LeviLabel) -> Result<LeviClass> {
    levi.validate(kind)?;
    Ok(match (kind, levi) {
        (GroupKind::A(_), LeviLabel::Gl { m }) => match m.parts() {
            [m1, m2] if m1 == m2 => LeviClass::I,
            [_, _] => LeviClass::II,
            _ => {
                return Err(AtlasError::InvalidLevi(format!(
                    "{m} does not label a maximal Levi of {kind}"
                )))
            }
        },
        (GroupKind::C(_), &LeviLabel::MaxLevi { a, residual: p }) => {
            if a >= 2 * p {
                LeviClass::VII
            } else if a % 2 == 1 {
                LeviClass::VIII
            } else {
                LeviClass::IX
            }
        }
        (GroupKind::B(_) | GroupKind::D(_), &LeviLabel::MaxLevi { a, residual: q }) => {
            if q == 0 {
                if a % 2 == 1 {
                    LeviClass::VI
                } else {
                    LeviClass::IV
                }
            } else if a < q {
                LeviClass::V
            } else if (a - q) % 2 == 1 {
                LeviClass::III
            } else {
                LeviClass::IV
            }
        }
        _ => {
            return Err(AtlasError::InvalidLevi(format!(
                "{levi} is not a maximal Levi label of {kind}"
            )))
        }
    })
}

/// Jordan type of the orbit induced from the zero orbit of the Levi, read
/// from the class row.
fn class_partition(class: LeviClass, levi: &LeviLabel) -> Result<Partition> {
    let blocks: Vec<(usize, usize)> = match (class, levi) {
        (LeviClass::I, LeviLabel::Gl { m }) => vec![(2, m.parts()[0])],
        (LeviClass::II, LeviLabel::Gl { m }) => {
            let (m1, m2) = (m.parts()[0], m.parts()[1]);
            vec![(2, m2), (1, m1 - m2)]
        }
        (_, &LeviLabel::MaxLevi { a, residual }) => match class {
            LeviClass::III => vec![(3, residual), (2, a - residual - 1), (1, 2)],
            LeviClass::IV => vec![(3, residual), (2, a - residual)],
            LeviClass::V => vec![(3, a), (1, residual - a)],
            LeviClass::VI => vec![(2, a - 1), (1, 2)],
            LeviClass::VII => vec![(3, 2 * residual), (2, a - 2 * residual)],
            LeviClass::VIII => vec![(3, a - 1), (2, 2), (1, 2 * residual - a - 1)],
            LeviClass::IX => vec![(3, a), (1, 2 * residual - a)],
            LeviClass::I | LeviClass::II => unreachable!(),
        },
        _ => unreachable!("class and label agree"),
    };
    Partition::from_blocks(&blocks)
}

/// The Dixmier sheet of a maximal Levi.
pub fn maximal_levi_sheet(kind: GroupKind, levi: &LeviLabel) -> Result<SheetDescriptor> {
    let class = classify_maximal_levi(kind, levi)?;
    let orbit = class_partition(class, levi)?;
    let d = levi.dim(kind)?;
    let w_l = GroupOrder::new(class.w_l_order());
    let f = class.katsylo_order();
    let desc = SheetDescriptor {
        kind,
        label: None,
        levi: levi.clone(),
        rigid_orbit: None,
        dixmier: true,
        nilpotent_orbit: NilpotentOrbit::Partition(orbit),
        d,
        dim_z: 1,
        w_s_order: w_l
            .quotient(&GroupOrder::new(f))
            .expect("|F| divides |W_L| in every class"),
        w_l_order: w_l,
        katsylo_order: f,
        dim_sheet: kind.dim_g() - d + 1,
        class_tag: Some(class),
        type_tag: Some(class.ramification_type()),
        component_group_order: matches!(kind, GroupKind::A(_)).then_some(1),
        conjugate_only_under_o: matches!(
            (kind, levi),
            (GroupKind::D(_), LeviLabel::MaxLevi { a, residual: 0 }) if a % 2 == 0
        ),
    };
    desc.check_invariants()?;
    Ok(desc)
}

/// The sheet of `F_4` with Levi of type `B_3`.
pub fn f4_b3_sheet() -> SheetDescriptor {
    let d = 22;
    SheetDescriptor {
        kind: GroupKind::F4,
        label: None,
        levi: LeviLabel::F4B3,
        rigid_orbit: None,
        dixmier: true,
        nilpotent_orbit: NilpotentOrbit::BalaCarter("Ã2".to_string()),
        d,
        dim_z: 1,
        w_l_order: GroupOrder::new(2),
        katsylo_order: 1,
        w_s_order: GroupOrder::new(2),
        dim_sheet: 52 - d + 1,
        class_tag: None,
        type_tag: Some(RamificationType::Type2),
        component_group_order: None,
        conjugate_only_under_o: false,
    }
}

/// Every maximal-Levi label (two-part `GL` labels included) for groups whose
/// defining representation has dimension `2..=max_n`.
pub fn all_maximal_levi_labels(max_n: usize) -> Vec<(GroupKind, LeviLabel)> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for m2 in 1..=n / 2 {
            let m = Partition::new(vec![n - m2, m2]).expect("positive parts");
            out.push((GroupKind::A(n), LeviLabel::Gl { m }));
        }
    }
    let mut push_form = |kind: GroupKind| {
        let n = kind.natural_dim().unwrap();
        for a in 1..=n / 2 {
            let residual = match kind {
                GroupKind::C(r) => r - a,
                _ => n - 2 * a,
            };
            let levi = LeviLabel::MaxLevi { a, residual };
            if levi.validate(kind).is_ok() {
                out.push((kind, levi));
            }
        }
    };
    for r in 1..=max_n.saturating_sub(1) / 2 {
        push_form(GroupKind::B(r));
    }
    for r in 1..=max_n / 2 {
        push_form(GroupKind::C(r));
    }
    for r in 2..=max_n / 2 {
        push_form(GroupKind::D(r));
    }
    out
}

/// Looks a sheet up by its Levi. `sp_4` labels resolve to the named rows,
/// type A labels to [`gln_sheet`], others to [`maximal_levi_sheet`].
pub fn sheet_by_levi(kind: GroupKind, levi: &LeviLabel) -> Result<SheetDescriptor> {
    levi.validate(kind)?;
    if kind == GroupKind::C(2) {
        if let Some(row) = sheets_sp4()
            .into_iter()
            .find(|s| &s.levi == levi && s.dixmier)
        {
            return Ok(row);
        }
    }
    match (kind, levi) {
        (GroupKind::A(_), LeviLabel::Gl { m }) => gln_sheet(m),
        (GroupKind::A(n), LeviLabel::Torus) => gln_sheet(&Partition::new(vec![1; n])?),
        (GroupKind::A(n), LeviLabel::Whole) => gln_sheet(&Partition::new(vec![n])?),
        (GroupKind::F4, LeviLabel::F4B3) => Ok(f4_b3_sheet()),
        (_, LeviLabel::MaxLevi { .. }) => maximal_levi_sheet(kind, levi),
        _ => Err(AtlasError::OutOfScope(format!(
            "no tabulated sheet of {kind} with Levi {levi}"
        ))),
    }
}

/// Every tabulated sheet of `kind`: all sheets of `gl_n` (largest Levi
/// partition first), the five `sp_4` rows, the maximal-Levi Dixmier sheets
/// of other classical groups, and the `B_3` sheet of `F_4`.
pub fn sheets_of_kind(kind: GroupKind) -> Result<Vec<SheetDescriptor>> {
    kind.validate()?;
    match kind {
        GroupKind::A(n) => {
            let mut all = enumerate_sheets_gln(n)?;
            all.sort_by(|x, y| match (&x.levi, &y.levi) {
                (LeviLabel::Gl { m: a }, LeviLabel::Gl { m: b }) => b.parts().cmp(a.parts()),
                _ => std::cmp::Ordering::Equal,
            });
            Ok(all)
        }
        GroupKind::C(2) => Ok(sheets_sp4()),
        GroupKind::F4 => Ok(vec![f4_b3_sheet()]),
        _ => {
            let n = kind.natural_dim().expect("classical");
            all_maximal_levi_labels(n)
                .into_iter()
                .filter(|(k, _)| *k == kind)
                .map(|(k, levi)| maximal_levi_sheet(k, &levi))
                .collect()
        }
    }
}

/// Resolves an identifier produced by [`SheetDescriptor::id`].
pub fn sheet_by_id(id: &str) -> Result<SheetDescriptor> {
    let (kind, rest) = id
        .split_once(':')
        .ok_or_else(|| AtlasError::Parse(format!("sheet id {id:?} has no ':'")))?;
    let kind: GroupKind = kind.parse()?;
    if kind == GroupKind::C(2) {
        if let Some(row) = sp4_row(rest.trim()) {
            return Ok(row);
        }
    }
    sheet_by_levi(kind, &LeviLabel::parse(kind, rest)?)
}

impl std::str::FromStr for GroupKind {
    type Err = AtlasError;

    /// Accepts the display names `GL4`, `SO5`, `Sp4`, `SO6`, `F4`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_uppercase();
        let bad = || AtlasError::Parse(format!("unknown group {s:?}"));
        if t == "F4" {
            return Ok(GroupKind::F4);
        }
        let split = t.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?;
        let (family, digits) = t.split_at(split);
        let n: usize = digits.parse().map_err(|_| bad())?;
        let kind = match (family, n % 2) {
            ("GL", _) => GroupKind::A(n),
            ("SP", 0) => GroupKind::C(n / 2),
            ("SO", 1) => GroupKind::B(n / 2),
            ("SO", 0) => GroupKind::D(n / 2),
            _ => return Err(bad()),
        };
        kind.validate()?;
        Ok(kind)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn max_levi(kind: GroupKind, a: usize, residual: usize) -> SheetDescriptor {
        maximal_levi_sheet(kind, &LeviLabel::MaxLevi { a, residual }).unwrap()
    }

    #[test]
    fn kind_basics() {
        assert_eq!(GroupKind::C(2).to_string(), "Sp4");
        assert_eq!(GroupKind::B(2).to_string(), "SO5");
        assert_eq!(GroupKind::D(3).dim_g(), 15);
        assert_eq!(GroupKind::D(4).invariant_degrees(), vec![2, 4, 4, 6]);
        assert_eq!(GroupKind::C(2).weyl_order(), GroupOrder::new(8));
        assert!(GroupKind::new("D", Some(1)).is_err());
        assert_eq!(
            serde_json::to_string(&GroupKind::C(2)).unwrap(),
            r#"{"family":"C","rank":2}"#
        );
    }

    #[test]
    fn gln_examples() {
        let s = gln_sheet(&p(&[2, 1, 1])).unwrap();
        assert_eq!(s.nilpotent_orbit, NilpotentOrbit::Partition(p(&[3, 1])));
        assert_eq!((s.d, s.dim_z, s.dim_sheet), (6, 3, 13));
        assert_eq!(s.w_l_order, GroupOrder::new(2));
        let s = gln_sheet(&p(&[1, 1])).unwrap();
        assert_eq!((s.d, s.dim_sheet), (2, 4));
        let s = gln_sheet(&p(&[2, 2])).unwrap();
        assert_eq!((s.d, s.dim_z), (8, 2));
        assert_eq!(s.class_tag, Some(LeviClass::I));
        assert_eq!(enumerate_sheets_gln(5).unwrap().len(), 7);
        assert!(enumerate_sheets_gln(0).is_err());
        assert!(enumerate_sheets_gln(41).is_err());
    }

    #[test]
    fn large_weyl_orders_serialize_as_strings() {
        let s = gln_sheet(&Partition::new(vec![1; 25]).unwrap()).unwrap();
        let v = serde_json::to_value(&s).unwrap();
        assert_eq!(v["w_l_order"], "15511210043330985984000000");
        let back: SheetDescriptor = serde_json::from_value(v).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn table_two_examples() {
        let s = max_levi(GroupKind::B(2), 2, 1);
        assert_eq!(s.class_tag, Some(LeviClass::III));
        assert_eq!(s.nilpotent_orbit, NilpotentOrbit::Partition(p(&[3, 1, 1])));
        assert_eq!((s.katsylo_order, s.w_l_order.to_u64()), (2, Some(2)));
        let s = max_levi(GroupKind::C(3), 2, 1);
        assert_eq!(s.class_tag, Some(LeviClass::VII));
        assert_eq!(s.nilpotent_orbit, NilpotentOrbit::Partition(p(&[3, 3])));
        let s = max_levi(GroupKind::D(3), 3, 0);
        assert_eq!(s.class_tag, Some(LeviClass::VI));
        assert_eq!(s.nilpotent_orbit, NilpotentOrbit::Partition(p(&[2, 2, 1, 1])));
        assert_eq!(s.w_l_order, GroupOrder::new(1));
        assert!(max_levi(GroupKind::D(4), 4, 0).conjugate_only_under_o);
        assert!(maximal_levi_sheet(GroupKind::D(3), &LeviLabel::MaxLevi { a: 2, residual: 2 }).is_err());
    }

    #[test]
    fn sp4_rows_agree_with_table_two() {
        let rows = sheets_sp4();
        assert_eq!(rows.len(), 5);
        for row in &rows {
            row.check_invariants().unwrap();
        }
        let dix = &rows[1];
        assert_eq!((dix.d, dix.dim_z, dix.dim_sheet), (4, 1, 7));
        let viii = max_levi(GroupKind::C(2), 1, 1);
        assert_eq!(viii.class_tag, Some(LeviClass::VIII));
        assert_eq!(viii.katsylo_order, dix.katsylo_order);
        assert_eq!(viii.nilpotent_orbit, dix.nilpotent_orbit);
        let vii = max_levi(GroupKind::C(2), 2, 0);
        assert_eq!(vii.katsylo_order, rows[2].katsylo_order);
        assert_eq!(rows[4].d, 10);
    }

    #[test]
    fn f4_record() {
        let s = f4_b3_sheet();
        assert_eq!((s.katsylo_order, s.w_l_order.to_u64(), s.dim_sheet), (1, Some(2), 31));
        s.check_invariants().unwrap();
    }

    #[test]
    fn orbit_dimensions() {
        assert_eq!(orbit_dimension(GroupKind::C(2), &p(&[2, 2])).unwrap(), 6);
        assert_eq!(orbit_dimension(GroupKind::B(2), &p(&[3, 1, 1])).unwrap(), 6);
        assert_eq!(orbit_dimension(GroupKind::C(2), &p(&[2, 1, 1])).unwrap(), 4);
        assert_eq!(orbit_dimension(GroupKind::A(4), &p(&[4])).unwrap(), 12);
    }

    #[test]
    fn levi_parsing() {
        assert_eq!(
            LeviLabel::parse(GroupKind::C(2), "1,1").unwrap(),
            LeviLabel::MaxLevi { a: 1, residual: 1 }
        );
        assert_eq!(
            LeviLabel::parse(GroupKind::A(4), "2,1,1").unwrap(),
            LeviLabel::Gl { m: p(&[2, 1, 1]) }
        );
        assert!(LeviLabel::parse(GroupKind::C(2), "1,2").is_err());
        assert_eq!(LeviLabel::parse(GroupKind::F4, "B3").unwrap(), LeviLabel::F4B3);
    }

    #[test]
    fn every_label_up_to_twelve_is_consistent() {
        let labels = all_maximal_levi_labels(12);
        let mut seen = std::collections::BTreeSet::new();
        for (kind, levi) in &labels {
            let s = if let GroupKind::A(_) = kind {
                let LeviLabel::Gl { m } = levi else { unreachable!() };
                gln_sheet(m).unwrap()
            } else {
                maximal_levi_sheet(*kind, levi).unwrap()
            };
            s.check_invariants().unwrap();
            seen.insert(s.class_tag.unwrap());
        }
        assert_eq!(seen.len(), 9);
    }

    #[test]
    fn ids_round_trip() {
        for kind in [GroupKind::A(4), GroupKind::B(3), GroupKind::C(2), GroupKind::C(3), GroupKind::D(4), GroupKind::F4] {
            assert_eq!(kind.to_string().parse::<GroupKind>().unwrap(), kind);
            for s in sheets_of_kind(kind).unwrap() {
                assert_eq!(sheet_by_id(&s.id()).unwrap(), s, "{}", s.id());
            }
        }
        assert!("SO0".parse::<GroupKind>().is_err());
        assert!("Sp3".parse::<GroupKind>().is_err());
        assert!(sheet_by_id("Sp4").is_err());
    }

    #[test]
    fn gl_sheets_are_listed_largest_first() {
        let ids: Vec<String> = sheets_of_kind(GroupKind::A(3)).unwrap().iter().map(SheetDescriptor::id).collect();
        assert_eq!(ids, ["GL3:(3)", "GL3:(2,1)", "GL3:(1,1,1)"]);
    }
}
