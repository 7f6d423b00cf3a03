//! Size-function specifications such as `linear`, `power:1.5`, `combo:0.3`,
//! `ratio:0.5`, `damks:4`, `sqrt`, `log1p`, `plateau:3`,
//! `affine:4:6:1.4` and `table:0,1,1.8,2.4`.

use fdense_core::{Exact, Family, Graph, SizeFunction, Weight};
use num_rational::Ratio;

use crate::edgelist::parse_rational;

fn ratio(text: &str) -> Result<Ratio<i64>, String> {
    parse_rational(text.trim())
}

fn number<T: std::str::FromStr>(text: &str, what: &str) -> Result<T, String> {
    text.trim()
        .parse()
        .map_err(|_| format!("cannot parse {what} '{text}'"))
}

/// Builds the size function described by `spec` for graph `g`.
///
/// `damks:k` uses W = w(V) and the heaviest edge weight. Tables whose entries
/// are all decimals or fractions are kept exact.
pub fn parse_size_function(spec: &str, g: &Graph) -> Result<SizeFunction, String> {
    let n = g.n();
    let (name, arg) = spec.split_once(':').unwrap_or((spec, ""));
    let need = |what: &str| -> Result<(), String> {
        if arg.is_empty() {
            Err(format!("'{name}' needs {what}, as in '{name}:{what}'"))
        } else {
            Ok(())
        }
    };
    let family = match name.trim() {
        "linear" => Family::Linear,
        "sqrt" => return Ok(SizeFunction::sqrt(n)),
        "log1p" => return Ok(SizeFunction::log1p(n)),
        "plateau" => {
            need("cap")?;
            return Ok(SizeFunction::plateau(n, number(arg, "cap")?));
        }
        "power" => {
            need("alpha")?;
            Family::Power(number(arg, "alpha")?)
        }
        "combo" => {
            need("lambda")?;
            Family::ConvexCombo(ratio(arg)?)
        }
        "ratio" => {
            need("lambda")?;
            Family::Ratio(ratio(arg)?)
        }
        "damks" => {
            need("k")?;
            Family::DamKs {
                k: number(arg, "k")?,
                total: g.total_weight(),
                edge: g.heaviest_edge().1,
            }
        }
        "affine" => {
            need("k:weight:slope")?;
            let parts: Vec<&str> = arg.split(':').collect();
            if parts.len() != 3 {
                return Err(format!("'affine' takes k:weight:slope, got '{arg}'"));
            }
            Family::FrontierAffine {
                k: number(parts[0], "k")?,
                weight: ratio(parts[1])?,
                slope: ratio(parts[2])?,
            }
        }
        "table" => {
            need("values")?;
            let cells: Vec<&str> = arg.split(',').collect();
            match cells
                .iter()
                .map(|c| ratio(c))
                .collect::<Result<Vec<Weight>, _>>()
            {
                Ok(exact) => Family::RationalTable(
                    exact
                        .into_iter()
                        .map(|w| Exact::new(i128::from(*w.numer()), i128::from(*w.denom())))
                        .collect(),
                ),
                Err(_) => Family::Table(
                    cells
                        .iter()
                        .map(|c| number::<f64>(c, "table value"))
                        .collect::<Result<_, _>>()?,
                ),
            }
        }
        other => return Err(format!("unknown size function '{other}'")),
    };
    let n_max = match &family {
        Family::Table(t) => t.len().saturating_sub(1),
        Family::RationalTable(t) => t.len().saturating_sub(1),
        _ => n,
    };
    SizeFunction::new(family, n_max).map_err(|e| e.to_string())
}

/// Applies the `FDS_TOL` override when set.
pub fn with_env_tol(f: SizeFunction) -> Result<SizeFunction, String> {
    match std::env::var("FDS_TOL") {
        Ok(t) => {
            let tol: f64 = number(&t, "FDS_TOL")?;
            if !(tol >= 0.0 && tol.is_finite()) {
                return Err(format!("FDS_TOL = {t} must be a non-negative number"));
            }
            Ok(f.with_tol(tol))
        }
        Err(_) => Ok(f),
    }
}
