use num_bigint::BigInt;

/// One numerical inequality `lhs ≥ rhs` (or `>` when strict), evaluated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Inequality {
    pub name: &'static str,
    pub lhs: BigInt,
    pub rhs: BigInt,
    pub strict: bool,
    pub holds: bool,
}

impl Inequality {
    pub fn new(name: &'static str, lhs: BigInt, rhs: BigInt, strict: bool) -> Self {
        let holds = if strict { lhs > rhs } else { lhs >= rhs };
        Inequality { name, lhs, rhs, strict, holds }
    }

    pub fn relation(&self) -> &'static str {
        if self.strict {
            ">"
        } else {
            ">="
        }
    }

    pub fn is_equality(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Abhyankar: `e0 ≥ δ + 1`.
pub fn check_abhyankar(e0: &BigInt, delta: &BigInt) -> Inequality {
    Inequality::new("A", e0.clone(), delta + 1, false)
}

/// Northcott: `e1 ≥ e0 - 1`.
pub fn check_northcott(e0: &BigInt, e1: &BigInt) -> Inequality {
    Inequality::new("N", e1.clone(), e0 - 1, false)
}

/// Sally, as two clauses: `e2 ≥ e1 - e0 + 1` and `e1 - e0 + 1 ≥ 0`.
pub fn check_sally(e0: &BigInt, e1: &BigInt, e2: &BigInt) -> (Inequality, Inequality) {
    let mid: BigInt = e1 - e0 + 1;
    (Inequality::new("S.1", e2.clone(), mid.clone(), false), Inequality::new("S.2", mid, BigInt::from(0), false))
}

/// Goto-Nishida: `e1 - e1(q) ≥ e0 - 1`.
pub fn check_goto_nishida(e1: &BigInt, e1_of_q: &BigInt, e0: &BigInt) -> Inequality {
    Inequality::new("GN", e1 - e1_of_q, e0 - 1, false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn family_values() {
        for n in 1..=6i64 {
            let (e0, e1, e2) = (b(2), b(1 - n), b(-n * (n + 1) / 2));
            let a = check_abhyankar(&e0, &b(2));
            assert!(!a.holds && a.lhs == b(2) && a.rhs == b(3));
            assert!(!check_northcott(&e0, &e1).holds);
            let (s1, s2) = check_sally(&e0, &e1, &e2);
            assert_eq!(s1.holds, n == 1);
            assert!(!s2.holds);
            let gn = check_goto_nishida(&e1, &b(-n), &e0);
            assert!(gn.holds && gn.is_equality());
        }
    }
}
