//! Rendering of the computation results: aligned text for humans, canonical
//! JSON (sorted keys, stable bytes) for machines.

use anyhow::{anyhow, Result};
use serde_json::{json, Map, Value};

use brieskorn::{
    almost_contact_class, ac_group, approx_decimal, diffeo_class, format_rational,
    mean_euler_characteristic, search_with_profile, signature_counts_fast,
    signature_counts_naive, signature_estimate_clt, sphere_criterion, standard_sphere_chi_m,
    AcClass, Budget, ComboRecipe, Error, ExponentTuple, FamilySign, GeneratorEntry,
    GradedRankTable, Marker, Rational, SearchHit, SignatureCount, SphereCondition,
    DIM7_PROFILE,
};

fn print_json(value: &Value) {
    println!("{value}");
}

fn int(v: u128) -> Result<Value> {
    u64::try_from(v)
        .map(Value::from)
        .map_err(|_| anyhow!("count {v} too large for JSON output"))
}

fn signed(v: i128) -> Result<Value> {
    i64::try_from(v)
        .map(Value::from)
        .map_err(|_| anyhow!("value {v} too large for JSON output"))
}

fn rational_value(r: &Rational) -> Value {
    json!({
        "numerator": r.numer().to_string(),
        "denominator": r.denom().to_string(),
    })
}

fn exponents_value(t: &ExponentTuple) -> Value {
    Value::from(t.exponents().to_vec())
}

fn counts_fields(map: &mut Map<String, Value>, c: &SignatureCount) -> Result<()> {
    map.insert("sigma_plus".into(), int(c.sigma_plus)?);
    map.insert("sigma_minus".into(), int(c.sigma_minus)?);
    map.insert("sigma_zero".into(), int(c.sigma_zero)?);
    map.insert("signature".into(), signed(c.signature())?);
    map.insert("mu".into(), int(c.mu)?);
    Ok(())
}

fn ac_value(class: &AcClass) -> Value {
    let mut map = Map::new();
    map.insert("primary".into(), Value::from(class.primary.to_string()));
    if let Some(s) = class.secondary {
        map.insert("secondary".into(), Value::from(u8::from(s)));
    }
    Value::Object(map)
}

fn rational_line(r: &Rational) -> String {
    format!("{} ({})", format_rational(r), approx_decimal(r))
}

fn sphere_line(t: &ExponentTuple) -> (String, Value) {
    match sphere_criterion(t) {
        Ok(v) => {
            let exps = t.exponents();
            let witness: Vec<u64> = v.witness.iter().map(|&i| exps[i]).collect();
            let (text, tag) = match v.condition {
                SphereCondition::TwoCoprimeExponents => (
                    format!(
                        "yes ({} and {} are coprime to all other exponents)",
                        witness[0], witness[1]
                    ),
                    "two_coprime_exponents",
                ),
                SphereCondition::OddEvenSet => (
                    format!(
                        "yes ({} globally coprime, odd even-set {:?})",
                        witness[0],
                        &witness[1..]
                    ),
                    "odd_even_set",
                ),
                SphereCondition::NotSphere => ("no".to_string(), "not_sphere"),
            };
            (text, json!({ "condition": tag, "witness": v.witness }))
        }
        Err(Error::DimensionTooLow(_)) => ("n/a (needs n >= 3)".to_string(), Value::Null),
        Err(e) => (format!("error: {e}"), Value::Null),
    }
}

pub fn invariants(t: &ExponentTuple, budget: Budget, json_mode: bool) -> Result<()> {
    let counts = signature_counts_fast(t, budget)?;
    let (sphere_text, sphere_json) = sphere_line(t);
    let diffeo = if t.n() >= 3 {
        Some(diffeo_class(t, budget)?)
    } else {
        None
    };
    let ac = match almost_contact_class(t, budget) {
        Ok(class) => Ok(class),
        Err(Error::NotStandardSphere) | Err(Error::DimensionTooLow(_)) => {
            Err("n/a (needs a verified standard smooth sphere)".to_string())
        }
        Err(e) => return Err(e.into()),
    };
    let mec = match mean_euler_characteristic(t, budget) {
        Ok(result) => Ok(result),
        Err(Error::ZeroPrincipalIndex) => {
            Err("undefined (principal Robbin-Salamon index is zero)".to_string())
        }
        Err(e) => return Err(e.into()),
    };

    if json_mode {
        let mut map = Map::new();
        map.insert("exponents".into(), exponents_value(t));
        map.insert("dimension".into(), Value::from(t.dimension()));
        counts_fields(&mut map, &counts)?;
        map.insert("sphere".into(), sphere_json);
        match &diffeo {
            Some(d) => {
                map.insert(
                    "is_topological_sphere".into(),
                    Value::from(d.is_topological_sphere),
                );
                map.insert(
                    "bp_index".into(),
                    d.bp_index
                        .as_ref()
                        .map(|b| Value::from(b.to_string()))
                        .unwrap_or(Value::Null),
                );
                map.insert(
                    "is_standard_smooth".into(),
                    d.is_standard_smooth.map(Value::from).unwrap_or(Value::Null),
                );
            }
            None => {
                map.insert("is_topological_sphere".into(), Value::Null);
                map.insert("bp_index".into(), Value::Null);
                map.insert("is_standard_smooth".into(), Value::Null);
            }
        }
        map.insert(
            "ac".into(),
            ac.as_ref().map(ac_value).unwrap_or(Value::Null),
        );
        map.insert(
            "chi_m".into(),
            mec.as_ref()
                .map(|m| rational_value(&m.value))
                .unwrap_or(Value::Null),
        );
        print_json(&Value::Object(map));
        return Ok(());
    }

    println!("Sigma{t}   dimension {} (n = {})", t.dimension(), t.n());
    println!("mu         = {}", counts.mu);
    println!("sigma^+    = {}", counts.sigma_plus);
    println!("sigma^-    = {}", counts.sigma_minus);
    println!("sigma^0    = {}", counts.sigma_zero);
    println!("signature  = {}", counts.signature());
    println!("sphere     = {sphere_text}");
    match &diffeo {
        Some(d) => match (&d.bp_index, d.is_standard_smooth) {
            (Some(bp), Some(standard)) => {
                let label = if standard {
                    "standard smooth sphere".to_string()
                } else {
                    format!("exotic sphere (bP index {bp})")
                };
                println!("diffeo     = {label}");
            }
            _ => {
                if d.is_topological_sphere {
                    println!("diffeo     = topological sphere (no bP data for odd n)");
                } else {
                    println!("diffeo     = not a sphere");
                }
            }
        },
        None => println!("diffeo     = n/a (needs n >= 3)"),
    }
    match &ac {
        Ok(class) => {
            let standard = if class.is_zero() {
                "  [homotopically standard]"
            } else {
                ""
            };
            println!("ac class   = {class}{standard}");
        }
        Err(note) => println!("ac class   = {note}"),
    }
    match &mec {
        Ok(m) => println!("chi_m      = {}", rational_line(&m.value)),
        Err(note) => println!("chi_m      = {note}"),
    }
    Ok(())
}

pub fn signature(
    t: &ExponentTuple,
    budget: Budget,
    fast: bool,
    naive: bool,
    estimate: bool,
    json_mode: bool,
) -> Result<()> {
    let fast_counts = fast.then(|| signature_counts_fast(t, budget)).transpose()?;
    let naive_counts = naive
        .then(|| signature_counts_naive(t, budget))
        .transpose()?;
    if let (Some(f), Some(n)) = (&fast_counts, &naive_counts) {
        if f != n {
            return Err(anyhow!("fast and naive counts disagree: {f:?} vs {n:?}"));
        }
    }
    let counts = fast_counts.or(naive_counts).expect("one method selected");
    let est = estimate.then(|| signature_estimate_clt(t));

    if json_mode {
        let mut map = Map::new();
        map.insert("exponents".into(), exponents_value(t));
        counts_fields(&mut map, &counts)?;
        if let Some(e) = est {
            map.insert(
                "estimate".into(),
                json!({
                    "sigma_plus": e.sigma_plus,
                    "sigma_minus": e.sigma_minus,
                    "degenerate": e.degenerate,
                }),
            );
        }
        print_json(&Value::Object(map));
        return Ok(());
    }

    println!("Sigma{t}");
    println!("sigma^+   = {}", counts.sigma_plus);
    println!("sigma^-   = {}", counts.sigma_minus);
    println!("sigma^0   = {}", counts.sigma_zero);
    println!("signature = {}", counts.signature());
    println!("mu        = {}", counts.mu);
    if fast && naive {
        println!("methods agree (fast = naive)");
    }
    if let Some(e) = est {
        println!(
            "normal estimate: sigma^+ ~ {:.1}, sigma^- ~ {:.1}{}",
            e.sigma_plus,
            e.sigma_minus,
            if e.degenerate { " (exact: zero variance)" } else { "" }
        );
    }
    Ok(())
}

pub fn chi_m(t: &ExponentTuple, budget: Budget, json_mode: bool) -> Result<()> {
    let result = mean_euler_characteristic(t, budget)?;

    if json_mode {
        let strata: Vec<Value> = result
            .strata
            .iter()
            .zip(&result.contributions)
            .map(|(s, &c)| {
                Ok(json!({
                    "exponents": s.exponents,
                    "period": int(s.period)?,
                    "dim": s.dim,
                    "rs": signed(s.rs)?,
                    "chi_s1": signed(s.chi_s1)?,
                    "frequency": int(s.frequency)?,
                    "contribution": signed(c)?,
                }))
            })
            .collect::<Result<_>>()?;
        let value = json!({
            "exponents": exponents_value(t),
            "mu_principal": signed(result.mu_principal)?,
            "strata": strata,
            "chi_m": rational_value(&result.value),
        });
        print_json(&value);
        return Ok(());
    }

    println!("Sigma{t}   mean Euler characteristic");
    println!(
        "{:<28} {:>12} {:>8} {:>14} {:>8} {:>14}",
        "stratum", "period/(pi/2)", "chi^S1", "frequency", "rs", "contribution"
    );
    for (s, c) in result.strata.iter().zip(&result.contributions) {
        let sub = ExponentTuple::new(s.exponents.iter().copied())
            .map(|t| t.to_string())
            .unwrap_or_else(|_| format!("{:?}", s.exponents));
        println!(
            "{:<28} {:>12} {:>8} {:>14} {:>8} {:>14}",
            sub, s.period, s.chi_s1, s.frequency, s.rs, c
        );
    }
    println!("mu_P  = {}", result.mu_principal);
    println!("chi_m = {}", rational_line(&result.value));
    Ok(())
}

pub fn classify(t: &ExponentTuple, budget: Budget, json_mode: bool) -> Result<()> {
    let n = t.n() as u64;
    let group = if n >= 2 { Some(ac_group(n)) } else { None };
    let class = almost_contact_class(t, budget);

    if json_mode {
        let mut map = Map::new();
        map.insert("exponents".into(), exponents_value(t));
        map.insert(
            "group".into(),
            group
                .as_ref()
                .map(|g| Value::from(g.to_string()))
                .unwrap_or(Value::Null),
        );
        match &class {
            Ok(c) => {
                map.insert("ac".into(), ac_value(c));
                map.insert("homotopically_standard".into(), Value::from(c.is_zero()));
            }
            Err(e) => {
                map.insert("ac".into(), Value::Null);
                map.insert("error".into(), Value::from(e.to_string()));
            }
        }
        print_json(&Value::Object(map));
        return Ok(());
    }

    println!("Sigma{t}   dimension {}", t.dimension());
    match group {
        Some(g) => println!("ac group = {g}"),
        None => println!("ac group = n/a"),
    }
    match class {
        Ok(c) => {
            println!("ac class = {c}");
            println!(
                "homotopically standard = {}",
                if c.is_zero() { "yes" } else { "no" }
            );
        }
        Err(e) => println!("ac class = n/a ({e})"),
    }
    Ok(())
}

pub fn rank_table(table: &GradedRankTable, json_mode: bool) -> Result<()> {
    if json_mode {
        let ranks: Vec<Value> = table
            .iter()
            .map(|(d, r)| Value::from(vec![Value::from(d), Value::from(r)]))
            .collect();
        print_json(&json!({
            "coefficients": table.coefficients(),
            "max_degree": table.max_degree(),
            "ranks": ranks,
        }));
        return Ok(());
    }
    println!("{:>7}  {:>5}", "degree", "rank");
    for (d, r) in table.iter() {
        println!("{d:>7}  {r:>5}");
    }
    println!("(coefficients {}, degrees <= {})", table.coefficients(), table.max_degree());
    Ok(())
}

pub fn generators(entries: &[GeneratorEntry], json_mode: bool) -> Result<()> {
    if json_mode {
        let list: Vec<Value> = entries
            .iter()
            .map(|e| {
                json!({
                    "degree": e.degree,
                    "orbit": e.label.to_string(),
                    "marker": match e.marker { Marker::Min => "min", Marker::Max => "max" },
                })
            })
            .collect();
        print_json(&Value::from(list));
        return Ok(());
    }
    println!("{:>7}  generator", "degree");
    for e in entries {
        let marker = match e.marker {
            Marker::Min => "min",
            Marker::Max => "max",
        };
        println!("{:>7}  {} ({})", e.degree, e.label, marker);
    }
    Ok(())
}

fn hit_json(hit: &SearchHit) -> Result<Value> {
    Ok(json!({
        "s": hit.s,
        "exponents": exponents_value(&hit.tuple),
        "sigma_plus": int(hit.counts.sigma_plus)?,
        "sigma_minus": int(hit.counts.sigma_minus)?,
        "sphere": hit.sphere,
        "ac_zero": hit.ac_zero,
    }))
}

pub fn search(s_min: u64, s_max: u64, budget: Budget, json_mode: bool) -> Result<()> {
    let mut emit_error = None;
    let hits = search_with_profile(&DIM7_PROFILE, s_min, s_max, budget, |hit| {
        if json_mode {
            match hit_json(hit) {
                Ok(v) => print_json(&v),
                Err(e) => emit_error = Some(e),
            }
        } else {
            println!(
                "s = {:<3} Sigma{}   sigma^+ = {:<8} sigma^- = {:<8} sphere = {}  ac = 0: {}",
                hit.s,
                hit.tuple,
                hit.counts.sigma_plus,
                hit.counts.sigma_minus,
                if hit.sphere { "yes" } else { "no" },
                if hit.ac_zero { "yes" } else { "no" }
            );
        }
    })?;
    if let Some(e) = emit_error {
        return Err(e);
    }
    if !json_mode {
        println!("-- {} hit(s) for s in [{s_min}, {s_max}] --", hits.len());
        for hit in &hits {
            println!("s = {:<3} Sigma{}", hit.s, hit.tuple);
        }
    }
    Ok(())
}

pub fn combo(recipe: &ComboRecipe, json_mode: bool) -> Result<()> {
    if json_mode {
        print_json(&json!({
            "sigma1": exponents_value(&recipe.sigma1),
            "sigma2": exponents_value(&recipe.sigma2),
            "ac1": recipe.ac1.to_string(),
            "ac2": recipe.ac2.to_string(),
            "count1": int(recipe.count1)?,
            "count2": int(recipe.count2)?,
            "chi_m": rational_value(&recipe.chi_m),
            "ac_total": ac_value(&recipe.ac_total),
            "nontrivial": recipe.nontrivial,
        }));
        return Ok(());
    }
    println!("Sigma_1 = {}   ac_1 = {}", recipe.sigma1, recipe.ac1);
    println!("Sigma_2 = {}   ac_2 = {}", recipe.sigma2, recipe.ac2);
    println!(
        "combination = {} x Sigma_1 # {} x Sigma_2",
        recipe.count1, recipe.count2
    );
    println!("total ac    = {}", recipe.ac_total);
    println!("chi_m       = {}", rational_line(&recipe.chi_m));
    let reference = standard_sphere_chi_m(recipe.sigma1.dimension())
        .map(|r| format_rational(&r))
        .unwrap_or_else(|_| "-1/2".to_string());
    println!(
        "nontrivial  = {} (standard sphere has chi_m = {reference})",
        if recipe.nontrivial { "yes" } else { "no" }
    );
    Ok(())
}

pub fn family(
    base: &ExponentTuple,
    modulus: u64,
    sign: FamilySign,
    k: u64,
    budget: Budget,
    json_mode: bool,
) -> Result<()> {
    let fam = brieskorn::family_signature(base, modulus, sign, budget)?;
    let member = fam.member(k)?;
    let per_k = fam.per_k();
    let predicted = fam.predicted_counts(k);
    let member_mu = member.milnor_number();
    let ac = almost_contact_class(&member, budget);

    if json_mode {
        let mut map = Map::new();
        map.insert("base".into(), exponents_value(base));
        map.insert("modulus".into(), Value::from(modulus));
        map.insert(
            "sign".into(),
            Value::from(match sign {
                FamilySign::Plus => 1,
                FamilySign::Minus => -1,
            }),
        );
        map.insert("k".into(), Value::from(k));
        map.insert("member".into(), exponents_value(&member));
        map.insert("member_mu".into(), int(member_mu)?);
        let mut per = Map::new();
        counts_fields(&mut per, &per_k)?;
        map.insert("per_k".into(), Value::Object(per));
        match predicted {
            Some(p) => {
                let mut pm = Map::new();
                counts_fields(&mut pm, &p)?;
                map.insert("predicted".into(), Value::Object(pm));
            }
            None => {
                map.insert(
                    "predicted_signature".into(),
                    signed(fam.predicted_signature(k))?,
                );
            }
        }
        map.insert(
            "ac".into(),
            ac.as_ref().map(ac_value).unwrap_or(Value::Null),
        );
        print_json(&Value::Object(map));
        return Ok(());
    }

    let shape = brieskorn::ParamLinear::new(modulus as i64, sign.offset())?;
    println!("family a_0 = {shape} over base {base}");
    println!("member(k = {k}) = {member}   mu = {member_mu}");
    println!(
        "per-k counts: sigma^+ = {}, sigma^- = {}, sigma^0 = {}, signature = {}, mu = {}",
        per_k.sigma_plus,
        per_k.sigma_minus,
        per_k.sigma_zero,
        per_k.signature(),
        per_k.mu
    );
    match predicted {
        Some(p) => println!(
            "predicted at k = {k}: sigma^+ = {}, sigma^- = {}, signature = {}, mu = {}",
            p.sigma_plus,
            p.sigma_minus,
            p.signature(),
            p.mu
        ),
        None => println!(
            "predicted at k = {k}: signature = {} (individual counts do not scale for the -1 family)",
            fam.predicted_signature(k)
        ),
    }
    match ac {
        Ok(class) => println!("member ac = {class}"),
        Err(e) => println!("member ac = n/a ({e})"),
    }
    Ok(())
}
