fn squarefree(m: u64) -> bool {
    let mut k = 2u64;
    while k * k <= m {
        if m.is_multiple_of(k * k) {
            return false;
        }
        k += 1;
    }
    true
}

/// Fundamental discriminant test for `d > 1`: `d = 1 mod 4` squarefree, or
/// `d = 4m` with `m = 2, 3 mod 4` squarefree.
pub fn is_fundamental(d: i64) -> bool {
    if d <= 1 {
        return false;
    }
    let d = d as u64;
    match d % 4 {
        1 => squarefree(d),
        0 => matches!((d / 4) % 4, 2 | 3) && squarefree(d / 4),
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert!(is_fundamental(62_501));
        assert!(is_fundamental(5));
        assert!(is_fundamental(12));
        assert!(is_fundamental(8));
        assert!(!is_fundamental(16));
        assert!(!is_fundamental(9));
        assert!(!is_fundamental(3));
        assert!(!is_fundamental(1));
        assert!(!is_fundamental(-3));
        assert!(!is_fundamental(45));
    }

    #[test]
    fn count_below_100() {
        let n = (2..100).filter(|&d| is_fundamental(d)).count();
        // 5 8 12 13 17 21 24 28 29 33 37 40 41 44 53 56 57 60 61 65 69 73 76 77 85 88 89 92 93 97
        assert_eq!(n, 30);
    }
}
