use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::StarShape;
use crate::exact::BigInt;
use crate::{Error, Result};

/// Labels along one arm, listed from the leaf towards the center.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArmLabels {
    /// `step, 2 step, ..., len * step`. This is the form every Coxeter
    /// labelling takes, and it costs O(1) memory regardless of arm length.
    Progression { step: BigInt, len: u64 },
    /// Arbitrary label values.
    Explicit(Vec<BigInt>),
}

impl ArmLabels {
    pub fn len(&self) -> u64 {
        match self {
            ArmLabels::Progression { len, .. } => *len,
            ArmLabels::Explicit(v) => v.len() as u64,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Label `j`, counted from 1 at the leaf.
    pub fn get(&self, j: u64) -> Option<BigInt> {
        if j == 0 || j > self.len() {
            return None;
        }
        match self {
            ArmLabels::Progression { step, .. } => Some(step * j),
            ArmLabels::Explicit(v) => Some(v[(j - 1) as usize].clone()),
        }
    }

    /// The label next to the center.
    pub fn last(&self) -> Option<BigInt> {
        self.get(self.len())
    }

    pub fn iter(&self) -> Box<dyn Iterator<Item = BigInt> + '_> {
        match self {
            ArmLabels::Progression { step, len } => Box::new((1..=*len).map(move |j| step * j)),
            ArmLabels::Explicit(v) => Box::new(v.iter().cloned()),
        }
    }

    pub fn sum(&self) -> BigInt {
        match self {
            ArmLabels::Progression { step, len } => {
                let len = BigInt::from(*len);
                step * &len * (&len + 1u32) / 2u32
            }
            ArmLabels::Explicit(v) => v.iter().sum(),
        }
    }

    pub fn gcd(&self) -> BigInt {
        match self {
            ArmLabels::Progression { step, len } if *len > 0 => step.abs(),
            ArmLabels::Progression { .. } => BigInt::zero(),
            ArmLabels::Explicit(v) => v.iter().fold(BigInt::zero(), |g, x| g.gcd(x)),
        }
    }

    fn all_positive(&self) -> bool {
        match self {
            ArmLabels::Progression { step, len } => *len == 0 || step.is_positive(),
            ArmLabels::Explicit(v) => v.iter().all(Signed::is_positive),
        }
    }

    /// Whether `2 c_j - c_{j-1} - c_{j+1} = 0` for every `j`, with
    /// `c_0 = 0` and `c_{len+1} = center`.
    fn satisfies_recurrence(&self, center: &BigInt) -> bool {
        match self {
            // Interior rows hold for any progression; only the row next to
            // the center constrains it: (len + 1) * step = center.
            ArmLabels::Progression { step, len } => &(step * (len + 1)) == center,
            ArmLabels::Explicit(v) => {
                let zero = BigInt::zero();
                (0..v.len()).all(|j| {
                    let before = if j == 0 { &zero } else { &v[j - 1] };
                    let after = v.get(j + 1).unwrap_or(center);
                    (&v[j] * 2u32 - before - after).is_zero()
                })
            }
        }
    }
}

/// A labelling of every vertex of a weighted star.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterLabels {
    pub center: BigInt,
    pub arms: Vec<ArmLabels>,
}

impl CoxeterLabels {
    /// Total of all labels, center included.
    pub fn sum(&self) -> BigInt {
        self.arms.iter().map(ArmLabels::sum).sum::<BigInt>() + &self.center
    }

    pub fn gcd(&self) -> BigInt {
        self.arms.iter().fold(self.center.abs(), |g, a| g.gcd(&a.gcd()))
    }

    pub fn is_primitive(&self) -> bool {
        self.gcd().is_one()
    }

    pub fn all_positive(&self) -> bool {
        self.center.is_positive() && self.arms.iter().all(ArmLabels::all_positive)
    }

    /// Divisor labels `x_i = c_{i,1}`, one per arm, in arm order.
    pub fn divisors(&self) -> Vec<BigInt> {
        self.arms.iter().map(|a| a.get(1).unwrap_or_default()).collect()
    }

    /// All labels in matrix vertex order: arms leaf to center, then the center.
    pub fn to_vector(&self) -> Vec<BigInt> {
        let mut out: Vec<BigInt> = self.arms.iter().flat_map(ArmLabels::iter).collect();
        out.push(self.center.clone());
        out
    }
}

/// Checks `B c = 0` row by row without building `B`.
///
/// Arm rows need `2 c_{i,j} - c_{i,j-1} - c_{i,j+1} = 0` with `c_{i,0} = 0`
/// and `c_{i,r_i+1}` the center label; the center row needs
/// `k s - sum_i c_{i,r_i} = 0`. Progression arms are checked in constant
/// time, so this scales to any dimension.
pub fn verify_kernel(shape: &StarShape, labels: &CoxeterLabels) -> Result<bool> {
    if labels.arms.len() != shape.m() {
        return Err(Error::LabelMismatch(format!(
            "{} arm label sequences for a star with {} arms",
            labels.arms.len(),
            shape.m()
        )));
    }
    for (i, (arm, &r)) in labels.arms.iter().zip(shape.arms()).enumerate() {
        if arm.len() != r {
            return Err(Error::LabelMismatch(format!(
                "arm {} has length {r} but {} labels",
                i + 1,
                arm.len()
            )));
        }
    }
    let s = &labels.center;
    if !labels.arms.iter().all(|a| a.satisfies_recurrence(s)) {
        return Ok(false);
    }
    let adjacent: BigInt = labels.arms.iter().filter_map(ArmLabels::last).sum();
    Ok((s * shape.k() - adjacent).is_zero())
}
