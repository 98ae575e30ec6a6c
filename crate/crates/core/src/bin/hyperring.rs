//! Command-line front end for the hyperring engine.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::sync::Arc;

use hyperring::classify::{classify, find_one_triple_zeros};
use hyperring::construct::{matrix_ring, product_ring, quotient_ring, zn_template};
use hyperring::gamma::gamma_star;
use hyperring::harness::{builtin_catalog, run_theorem_suite, Limits, Mode};
use hyperring::ideal::{
    colon_element, colon_set, d_set, enumerate_hyperideals, is_c_hyperideal, is_hyperideal,
    is_prime_set, maximal_hyperideals, radical,
};
use hyperring::ring::{validate_from_json_auto, Ring};
use hyperring::set::ElemSet;

const USAGE: &str = "\
usage: hyperring <command> [args]

commands:
  validate <file>                          check the table axioms
  classify <file> --ideal I [--assert C]   classify one hyperideal
  ideals <file>                            list all hyperideals
  radical <file> --ideal I                 radical and D-set of an ideal
  colon <file> --ideal I --by E            colon ideal (I : E)
  gamma <file>                             fundamental quotient
  triple-zeros <file> --ideal I            1-triple-zeros of a weakly ideal
  template zn --n N --A a,b -o FILE        emit a template ring
  template product --left F --right F -o FILE
  template quotient --input F --ideal I -o FILE
  template matrix --input F -o FILE
  theorems [--catalog default] [--only IDS] [--mode all|c-only] [--json FILE]

ideals are comma-joined index lists, e.g. --ideal 0,2
";

fn fail(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

struct Args {
    positional: Vec<String>,
    flags: BTreeMap<String, String>,
}

fn parse_args(argv: &[String]) -> Result<Args, String> {
    let mut positional = Vec::new();
    let mut flags = BTreeMap::new();
    let mut it = argv.iter().peekable();
    while let Some(arg) = it.next() {
        if let Some(name) = arg.strip_prefix("--") {
            let value = it
                .next()
                .ok_or_else(|| format!("flag --{name} needs a value"))?;
            flags.insert(name.to_string(), value.clone());
        } else if let Some(name) = arg.strip_prefix('-') {
            if name == "o" {
                let value = it.next().ok_or("flag -o needs a value")?;
                flags.insert("o".to_string(), value.clone());
            } else {
                return Err(format!("unknown flag -{name}"));
            }
        } else {
            positional.push(arg.clone());
        }
    }
    Ok(Args { positional, flags })
}

fn load_ring(path: &str) -> Result<(Ring, bool), String> {
    let doc = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
    validate_from_json_auto(&doc)
        .map(|(ring, sampled)| (Arc::new(ring), sampled))
        .map_err(|e| format!("{path}: {e}"))
}

fn parse_ideal_flag(args: &Args, ring: &Ring, flag: &str) -> Result<ElemSet, String> {
    let raw = args
        .flags
        .get(flag)
        .ok_or_else(|| format!("missing --{flag}"))?;
    let set = ElemSet::parse_csv(raw).ok_or_else(|| format!("--{flag}: bad index list '{raw}'"))?;
    if set.iter().any(|i| i >= ring.n) {
        return Err(format!("--{flag}: index out of range for n={}", ring.n));
    }
    Ok(set)
}

fn require_hyperideal(ring: &Ring, set: &ElemSet) -> Result<(), String> {
    if !is_hyperideal(ring, set) {
        return Err(format!("{{{}}} is not a hyperideal", set.csv()));
    }
    Ok(())
}

fn cmd_validate(args: &Args) -> Result<ExitCode, String> {
    let path = args.positional.first().ok_or("validate needs a file")?;
    let (ring, sampled) = load_ring(path)?;
    let u = ring.units();
    let how = if sampled { " (axioms checked on a deterministic sample)" } else { "" };
    println!(
        "valid hyperring '{}' (n={}){how}: strongly_distributive={} identities={{{}}} units={{{}}}",
        ring.name,
        ring.n,
        ring.strongly_distributive(),
        u.identities.csv(),
        u.units.csv(),
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_classify(args: &Args) -> Result<ExitCode, String> {
    let path = args.positional.first().ok_or("classify needs a file")?;
    let (ring, _) = load_ring(path)?;
    let ideal = parse_ideal_flag(args, &ring, "ideal")?;
    require_hyperideal(&ring, &ideal)?;
    let report = classify(&ring, &ideal).map_err(|e| e.to_string())?;
    println!("{}", serde_json::to_string(&report).expect("report serializes"));
    if let Some(class) = args.flags.get("assert") {
        let value = match class.as_str() {
            "prime" => report.prime,
            "primary" => report.primary,
            "maximal" => report.maximal,
            "one_abs_prime" => report.one_abs_prime,
            "one_abs_primary" => report.one_abs_primary,
            "strongly_one_abs_primary" => report.strongly_one_abs_primary,
            "weakly_one_abs_primary" => report.weakly_one_abs_primary,
            "two_absorbing" => report.two_absorbing,
            "two_absorbing_primary" => report.two_absorbing_primary,
            "is_c_hyperideal" => report.is_c_hyperideal,
            other => return Err(format!("--assert: unknown class '{other}'")),
        };
        if !value {
            return Ok(ExitCode::from(1));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_ideals(args: &Args) -> Result<ExitCode, String> {
    let path = args.positional.first().ok_or("ideals needs a file")?;
    let (ring, _) = load_ring(path)?;
    let all = enumerate_hyperideals(&ring).map_err(|e| e.to_string())?;
    let maximal = maximal_hyperideals(&ring).map_err(|e| e.to_string())?;
    let full = ring.carrier();
    let rows: Vec<serde_json::Value> = all
        .iter()
        .map(|i| {
            serde_json::json!({
                "ideal": i.csv(),
                "is_c_hyperideal": is_c_hyperideal(&ring, &i.members),
                "maximal": maximal.iter().any(|m| m.members == i.members),
                "prime": is_prime_set(&ring, &i.members),
                "proper": i.members != full,
            })
        })
        .collect();
    println!("{}", serde_json::to_string(&rows).expect("rows serialize"));
    Ok(ExitCode::SUCCESS)
}

fn cmd_radical(args: &Args) -> Result<ExitCode, String> {
    let path = args.positional.first().ok_or("radical needs a file")?;
    let (ring, _) = load_ring(path)?;
    let ideal = parse_ideal_flag(args, &ring, "ideal")?;
    require_hyperideal(&ring, &ideal)?;
    let rad = radical(&ring, &ideal).map_err(|e| e.to_string())?;
    let d = d_set(&ring, &ideal);
    println!(
        "{}",
        serde_json::json!({
            "d_set": d.csv(),
            "ideal": ideal.csv(),
            "is_c_hyperideal": is_c_hyperideal(&ring, &ideal),
            "radical": rad.csv(),
        })
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_colon(args: &Args) -> Result<ExitCode, String> {
    let path = args.positional.first().ok_or("colon needs a file")?;
    let (ring, _) = load_ring(path)?;
    let ideal = parse_ideal_flag(args, &ring, "ideal")?;
    require_hyperideal(&ring, &ideal)?;
    let by_raw = args.flags.get("by").ok_or("missing --by")?;
    let result = if by_raw.contains(',') {
        let by = parse_ideal_flag(args, &ring, "by")?;
        colon_set(&ring, &ideal, &by)
    } else {
        let a: usize = by_raw.parse().map_err(|_| format!("--by: bad element '{by_raw}'"))?;
        if a >= ring.n {
            return Err(format!("--by: index out of range for n={}", ring.n));
        }
        colon_element(&ring, &ideal, a)
    };
    println!(
        "{}",
        serde_json::json!({"by": by_raw, "colon": result.csv(), "ideal": ideal.csv()})
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_gamma(args: &Args) -> Result<ExitCode, String> {
    let path = args.positional.first().ok_or("gamma needs a file")?;
    let (ring, _) = load_ring(path)?;
    let q = gamma_star(&ring).map_err(|e| e.to_string())?;
    let k = q.ring.n;
    println!(
        "{}",
        serde_json::json!({
            "class_add": (0..k).map(|a| (0..k).map(|b| q.ring.add(a, b)).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "class_mul": (0..k)
                .map(|a| (0..k).map(|b| q.ring.mul(a, b).min_elem().expect("singleton cell")).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "classes": q.classes.iter().map(|c| c.to_vec()).collect::<Vec<_>>(),
            "projection": q.projection,
        })
    );
    Ok(ExitCode::SUCCESS)
}

fn emit_ring(args: &Args, ring: &Ring) -> Result<ExitCode, String> {
    let out = args.flags.get("o").ok_or("missing -o FILE")?;
    std::fs::write(out, ring.to_json()).map_err(|e| format!("{out}: {e}"))?;
    println!("wrote {} (n={}) to {}", ring.name, ring.n, out);
    Ok(ExitCode::SUCCESS)
}

fn cmd_template(args: &Args) -> Result<ExitCode, String> {
    let kind = args
        .positional
        .first()
        .ok_or("template needs a kind: zn | product | quotient | matrix")?;
    match kind.as_str() {
        "zn" => {
            let n: usize = args
                .flags
                .get("n")
                .ok_or("missing --n")?
                .parse()
                .map_err(|_| "--n: not a number".to_string())?;
            let a: Vec<u64> = args
                .flags
                .get("A")
                .ok_or("missing --A")?
                .split(',')
                .map(|s| s.parse().map_err(|_| format!("--A: bad entry '{s}'")))
                .collect::<Result<_, _>>()?;
            if n == 0 || a.is_empty() {
                return Err("need n ≥ 1 and a nonempty --A".into());
            }
            let ring = zn_template(n, &a).map_err(|e| e.to_string())?;
            emit_ring(args, &ring)
        }
        "product" => {
            let (l, _) = load_ring(args.flags.get("left").ok_or("missing --left")?)?;
            let (r, _) = load_ring(args.flags.get("right").ok_or("missing --right")?)?;
            let p = product_ring(&l, &r).map_err(|e| e.to_string())?;
            emit_ring(args, &p)
        }
        "quotient" => {
            let (base, _) = load_ring(args.flags.get("input").ok_or("missing --input")?)?;
            let ideal = parse_ideal_flag(args, &base, "ideal")?;
            let q = quotient_ring(&base, &ideal).map_err(|e| e.to_string())?;
            emit_ring(args, &q.ring)
        }
        "matrix" => {
            let (base, _) = load_ring(args.flags.get("input").ok_or("missing --input")?)?;
            let m = matrix_ring(&base, 2).map_err(|e| e.to_string())?;
            emit_ring(args, &m)
        }
        other => Err(format!("unknown template kind '{other}'")),
    }
}

fn cmd_theorems(args: &Args) -> Result<ExitCode, String> {
    if let Some(cat) = args.flags.get("catalog") {
        if cat != "default" {
            return Err(format!("--catalog: only 'default' is available, got '{cat}'"));
        }
    }
    let mode = match args.flags.get("mode").map(String::as_str) {
        None => Mode::COnly,
        Some(s) => Mode::parse(s).ok_or_else(|| format!("--mode: expected all|c-only, got '{s}'"))?,
    };
    let only: Option<Vec<String>> = args
        .flags
        .get("only")
        .map(|s| s.split(',').map(str::to_string).collect());
    let catalog = builtin_catalog(&Limits::default()).map_err(|e| e.to_string())?;
    let report =
        run_theorem_suite(&catalog, only.as_deref(), mode).map_err(|e| e.to_string())?;
    print!("{}", report.table());
    if let Some(path) = args.flags.get("json") {
        std::fs::write(path, report.to_json()).map_err(|e| format!("{path}: {e}"))?;
    }
    if report.counterexamples().next().is_some() {
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_triple_zeros(args: &Args) -> Result<ExitCode, String> {
    let path = args.positional.first().ok_or("triple-zeros needs a file")?;
    let (ring, _) = load_ring(path)?;
    let ideal = parse_ideal_flag(args, &ring, "ideal")?;
    require_hyperideal(&ring, &ideal)?;
    let zeros = find_one_triple_zeros(&ring, &ideal).map_err(|e| e.to_string())?;
    println!("{}", serde_json::to_string(&zeros).expect("zeros serialize"));
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let Some(command) = argv.first().cloned() else {
        eprint!("{USAGE}");
        return ExitCode::from(2);
    };
    let args = match parse_args(&argv[1..]) {
        Ok(a) => a,
        Err(e) => return fail(&e),
    };
    let result = match command.as_str() {
        "validate" => cmd_validate(&args),
        "classify" => cmd_classify(&args),
        "ideals" => cmd_ideals(&args),
        "radical" => cmd_radical(&args),
        "colon" => cmd_colon(&args),
        "gamma" => cmd_gamma(&args),
        "template" => cmd_template(&args),
        "theorems" => cmd_theorems(&args),
        "triple-zeros" => cmd_triple_zeros(&args),
        "help" | "--help" | "-h" => {
            print!("{USAGE}");
            return ExitCode::SUCCESS;
        }
        other => return fail(&format!("unknown command '{other}'")),
    };
    match result {
        Ok(code) => code,
        Err(e) => fail(&e),
    }
}
