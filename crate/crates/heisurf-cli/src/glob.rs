//! Minimal glob matching for check-id filters: `*` matches any run of
//! characters (including none) and `?` matches exactly one.

/// Returns true when `text` matches `pattern`. Matching is
/// case-sensitive and anchored at both ends.
pub fn glob_match(pattern: &str, text: &str) -> bool {
    let p: Vec<char> = pattern.chars().collect();
    let t: Vec<char> = text.chars().collect();
    let (mut pi, mut ti) = (0usize, 0usize);
    let mut star: Option<(usize, usize)> = None;
    while ti < t.len() {
        if pi < p.len() && (p[pi] == '?' || p[pi] == t[ti]) {
            pi += 1;
            ti += 1;
        } else if pi < p.len() && p[pi] == '*' {
            star = Some((pi, ti));
            pi += 1;
        } else if let Some((sp, st)) = star {
            // Let the last star absorb one more character and retry.
            pi = sp + 1;
            ti = st + 1;
            star = Some((sp, st + 1));
        } else {
            return false;
        }
    }
    while pi < p.len() && p[pi] == '*' {
        pi += 1;
    }
    pi == p.len()
}

#[cfg(test)]
mod tests {
    use super::glob_match;

    #[test]
    fn literal_and_wildcards() {
        assert!(glob_match("chpp.disc.routes", "chpp.disc.routes"));
        assert!(!glob_match("chpp.disc.routes", "chpp.disc.lambda0"));
        assert!(glob_match("chpp.*", "chpp.disc.routes"));
        assert!(glob_match("*", "anything"));
        assert!(glob_match("*", ""));
        assert!(glob_match("*.dictionary", "pp4.gamma.dictionary"));
        assert!(glob_match("pp4.*.m?0", "pp4.branch.mu0"));
        assert!(!glob_match("chpp.*", "pp4.branch.mu0"));
        assert!(glob_match("*branch*", "pp4.branch.charts"));
        assert!(!glob_match("?", ""));
        assert!(glob_match("??", "ab"));
        assert!(!glob_match("??", "abc"));
        assert!(glob_match("a*b*c", "axxbyyc"));
        assert!(!glob_match("a*b*c", "axxbyy"));
    }
}
