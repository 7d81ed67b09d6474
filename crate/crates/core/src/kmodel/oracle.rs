//! Cross-check of the symbolic engine against finite truncations.

use serde::Serialize;

use super::{eval_k, truncate, truncation_assignment, truncation_world, KAssignment, KError, KWorld};
use crate::par::{self, Exec};
use crate::semantics::{eval, Model};
use crate::syntax::Formula;

/// One formula/world/assignment where K and the truncations disagree.
#[derive(Clone, Debug, Serialize)]
pub struct OracleMismatch {
    pub formula: String,
    pub world: KWorld,
    pub assignment: Vec<(String, i64)>,
    pub k: bool,
    /// Truth in `K_n`, `K_{n+1}`, `K_{n+2}`.
    pub truncations: [bool; 3],
}

#[derive(Clone, Debug, Default, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct OracleReport {
    pub formulas: usize,
    pub checks: usize,
    /// The truncation value changed inside the window.
    pub unstable: Vec<OracleMismatch>,
    /// Stable truncation value different from K.
    pub mismatches: Vec<OracleMismatch>,
    /// Stabilisation diagnostics from the `−∞` test set, and other engine
    /// errors.
    pub diagnostics: Vec<String>,
}

impl OracleReport {
    pub fn clean(&self) -> bool {
        self.unstable.is_empty() && self.mismatches.is_empty() && self.diagnostics.is_empty()
    }

    fn absorb(&mut self, o: OracleReport) {
        self.formulas += o.formulas;
        self.checks += o.checks;
        self.unstable.extend(o.unstable);
        self.mismatches.extend(o.mismatches);
        self.diagnostics.extend(o.diagnostics);
    }
}

/// Compares `eval_k` with evaluation over `K_n`, `K_{n+1}`, `K_{n+2}` for
/// `n = m + size(φ) + 2`, at `−∞` and `−1 … −m`, under every assignment of
/// the free variables into `{−m, …, −1}`.
pub fn truncation_oracle(corpus: &[Formula], m: usize, exec: Exec) -> OracleReport {
    let max_n = corpus.iter().map(|f| m + f.size() + 4).max().unwrap_or(0);
    let models: Vec<Model> = (0..=max_n).map(|n| if n == 0 { truncate(1) } else { truncate(n) }).collect();
    let parts = par::map(exec, corpus, |f| check_formula(f, m, &models));
    let mut out = OracleReport::default();
    for p in parts {
        out.absorb(p);
    }
    out
}

fn check_formula(f: &Formula, m: usize, models: &[Model]) -> OracleReport {
    let mut out = OracleReport { formulas: 1, ..Default::default() };
    let vars: Vec<_> = f.free_vars().into_iter().collect();
    let n = m + f.size() + 2;
    let worlds: Vec<KWorld> = std::iter::once(KWorld::MinusInf).chain((1..=m as i64).map(|k| KWorld::Int(-k))).collect();
    let mut odometer = vec![0usize; vars.len()];
    loop {
        let g: KAssignment = vars.iter().zip(&odometer).map(|(&v, &i)| (v, -(i as i64) - 1)).collect();
        for &w in &worlds {
            out.checks += 1;
            let k = match eval_k(f, w, &g) {
                Ok(b) => b,
                Err(e @ KError::Stabilization { .. }) => {
                    out.diagnostics.push(e.to_string());
                    continue;
                }
                Err(e) => {
                    out.diagnostics.push(format!("{}: {e}", crate::parser_io::print_formula(f)));
                    continue;
                }
            };
            let t = [n, n + 1, n + 2].map(|j| {
                let gw = truncation_assignment(j, &g).expect("values lie in the truncation");
                let ww = truncation_world(j, w).expect("world lies in the truncation");
                eval(&models[j], ww, &gw, f).expect("truncation evaluates the F fragment")
            });
            if t[0] != t[1] || t[1] != t[2] || t[0] != k {
                let mismatch = OracleMismatch {
                    formula: crate::parser_io::print_formula(f),
                    world: w,
                    assignment: g.0.iter().map(|(v, k)| (v.to_string(), *k)).collect(),
                    k,
                    truncations: t,
                };
                if t[0] == t[1] && t[1] == t[2] {
                    out.mismatches.push(mismatch);
                } else {
                    out.unstable.push(mismatch);
                }
            }
        }
        // next assignment
        let mut i = 0;
        loop {
            if i == odometer.len() {
                return out;
            }
            odometer[i] += 1;
            if odometer[i] < m {
                break;
            }
            odometer[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser_io::parse_formula;
    use crate::syntax::Language;

    #[test]
    fn atoms_and_material_formulas_agree() {
        let corpus: Vec<Formula> = ["F(x)", "forall y. (F(y) -> F(x))", "exists y. ~F(y) & F(x)", "F(x) > F(y)"]
            .iter()
            .map(|s| parse_formula(s, Language::Plain).unwrap())
            .collect();
        let r = truncation_oracle(&corpus, 3, Exec::Sequential);
        assert!(r.clean(), "{r:?}");
        assert_eq!(r.checks, 4 * 3 + 4 * 3 + 4 * 3 + 4 * 9);
    }

    #[test]
    fn bottom_of_the_truncation_is_visible() {
        // Every element has a strictly closer F-world in K, but not the
        // least element of a truncation.
        let f = parse_formula("forall x. exists y. (F(y) > ~F(x))", Language::Plain).unwrap();
        let r = truncation_oracle(std::slice::from_ref(&f), 2, Exec::Sequential);
        assert_eq!(r.mismatches.len(), 1);
        let m = &r.mismatches[0];
        assert_eq!((m.world, m.k, m.truncations), (KWorld::MinusInf, true, [false; 3]));
    }
}
