//! Command-line front end for the `garside` crate.
//!
//! [`run`] takes the full argument vector and returns the exit status together
//! with what would be written to stdout and stderr, so the binary is a thin
//! wrapper and the behaviour can be tested in-process.

use std::fmt::Write as _;

use clap::{Parser, Subcommand};
use garside::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

/// Environment variable overriding the simple-element enumeration cap.
pub const SIMPLE_CAP_ENV: &str = "GARSIDE_SIMPLE_CAP";

#[derive(Parser, Debug)]
#[command(
    name = "garside",
    version,
    about = "Normal forms, summit sets and rigidity in braid groups"
)]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Expand ultra summit graph levels on all cores (same output).
    #[arg(long, global = true)]
    parallel: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Left normal form of a word.
    Nf { structure: String, #[arg(allow_hyphen_values = true)] word: String },
    /// Inverse.
    Inv { structure: String, #[arg(allow_hyphen_values = true)] word: String },
    /// Product of two words.
    Mul {
        structure: String,
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Infimum, supremum and canonical length.
    InfSup { structure: String, #[arg(allow_hyphen_values = true)] word: String },
    /// Initial and final factors.
    IotaPhi { structure: String, #[arg(allow_hyphen_values = true)] word: String },
    /// Iterated cycling.
    Cycle {
        structure: String,
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(long, default_value_t = 1)]
        times: usize,
    },
    /// Iterated decycling.
    Decycle {
        structure: String,
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(long, default_value_t = 1)]
        times: usize,
    },
    /// A super summit conjugate and its conjugator.
    Sss { structure: String, #[arg(allow_hyphen_values = true)] word: String },
    /// The ultra summit set, orbit by orbit.
    Uss { structure: String, #[arg(allow_hyphen_values = true)] word: String },
    /// The ultra summit graph as DOT (or JSON with --json).
    UssGraph { structure: String, #[arg(allow_hyphen_values = true)] word: String },
    /// Rigidity k/r.
    Rigidity { structure: String, #[arg(allow_hyphen_values = true)] word: String },
    /// Search for a rigid power; prints the JSON report.
    RigidPower { structure: String, #[arg(allow_hyphen_values = true)] word: String },
    /// Conjugacy test with a verified conjugator.
    Conj {
        structure: String,
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Conjugate so every power in a window lies in its ultra summit set.
    Stabilize {
        structure: String,
        #[arg(allow_hyphen_values = true)]
        word: String,
        /// Window start (default -||Δ||).
        #[arg(long, allow_hyphen_values = true)]
        from: Option<i64>,
        /// Window end (default ||Δ||).
        #[arg(long, allow_hyphen_values = true)]
        to: Option<i64>,
    },
    /// Cycling record, absolute factors and chain stabilization.
    Chains { structure: String, #[arg(allow_hyphen_values = true)] word: String },
    /// CSV of summit statistics for random words.
    RandomStats {
        structure: String,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 8)]
        length: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Result of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn negative(stdout: String) -> Self {
        Outcome { code: 1, stdout, stderr: String::new() }
    }

    fn usage(msg: impl Into<String>) -> Self {
        let mut stderr = msg.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Outcome { code: 2, stdout: String::new(), stderr }
    }
}

#[derive(Clone, Copy, Debug)]
enum Structure {
    Braid(BraidGroup),
    Abelian(FreeAbelian),
}

fn parse_structure(text: &str) -> Result<Structure, String> {
    let (family, n) = text
        .split_once(':')
        .ok_or_else(|| format!("bad structure `{text}`: expected braid:N or zn:N"))?;
    let n: usize = n
        .trim()
        .parse()
        .map_err(|_| format!("bad structure `{text}`: rank is not a number"))?;
    match family.trim() {
        "braid" => braid(n).map(Structure::Braid).map_err(|e| e.to_string()),
        "zn" => free_abelian(n).map(Structure::Abelian).map_err(|e| e.to_string()),
        other => Err(format!("unknown structure family `{other}`")),
    }
}

fn search_options(parallel: bool) -> Result<SearchOptions, String> {
    let mut opts = SearchOptions { parallel, ..SearchOptions::default() };
    if let Ok(v) = std::env::var(SIMPLE_CAP_ENV) {
        opts.simple_cap = v
            .trim()
            .parse()
            .map_err(|_| format!("{SIMPLE_CAP_ENV} must be a positive integer, got `{v}`"))?;
    }
    Ok(opts)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::usage(text)
            } else {
                Outcome::ok(text)
            };
        }
    };
    let opts = match search_options(cli.parallel) {
        Ok(o) => o,
        Err(e) => return Outcome::usage(e),
    };
    let structure = match parse_structure(cli.command.structure()) {
        Ok(s) => s,
        Err(e) => return Outcome::usage(e),
    };
    let ctx = Ctx { json: cli.json, opts };
    match structure {
        Structure::Braid(g) => ctx.execute(g, &cli.command),
        Structure::Abelian(g) => ctx.execute(g, &cli.command),
    }
}

impl Command {
    fn structure(&self) -> &str {
        use Command::*;
        match self {
            Nf { structure, .. }
            | Inv { structure, .. }
            | Mul { structure, .. }
            | InfSup { structure, .. }
            | IotaPhi { structure, .. }
            | Cycle { structure, .. }
            | Decycle { structure, .. }
            | Sss { structure, .. }
            | Uss { structure, .. }
            | UssGraph { structure, .. }
            | Rigidity { structure, .. }
            | RigidPower { structure, .. }
            | Conj { structure, .. }
            | Stabilize { structure, .. }
            | Chains { structure, .. }
            | RandomStats { structure, .. } => structure,
        }
    }
}

struct Ctx {
    json: bool,
    opts: SearchOptions,
}

fn lines(items: &[String]) -> String {
    let mut s = items.join("\n");
    s.push('\n');
    s
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

impl Ctx {
    fn emit(&self, json: Value, text: Vec<String>) -> Outcome {
        Outcome::ok(if self.json { pretty(&json) } else { lines(&text) })
    }

    fn execute<G: GarsideStructure>(&self, g: G, cmd: &Command) -> Outcome {
        match self.dispatch(g, cmd) {
            Ok(out) => out,
            Err(e) => Outcome::usage(format!("error: {e}")),
        }
    }

    fn dispatch<G: GarsideStructure>(&self, g: G, cmd: &Command) -> Result<Outcome> {
        let word = |w: &str| parse_word(w, g);
        let simple = |s: &G::Simple| format_simple(&g, s);
        Ok(match cmd {
            Command::Nf { word: w, .. } => {
                let x = word(w)?;
                self.emit(nf_json(&x), vec![x.to_string()])
            }
            Command::Inv { word: w, .. } => {
                let x = word(w)?.inverse();
                self.emit(nf_json(&x), vec![x.to_string()])
            }
            Command::Mul { left, right, .. } => {
                let x = word(left)?.multiply(&word(right)?);
                self.emit(nf_json(&x), vec![x.to_string()])
            }
            Command::InfSup { word: w, .. } => {
                let x = word(w)?;
                self.emit(
                    json!({"inf": x.inf(), "sup": x.sup(), "length": x.canonical_length()}),
                    vec![format!(
                        "inf={} sup={} length={}",
                        x.inf(),
                        x.sup(),
                        x.canonical_length()
                    )],
                )
            }
            Command::IotaPhi { word: w, .. } => {
                let x = word(w)?;
                let (i, f) = (simple(&x.initial_factor()), simple(&x.final_factor()));
                self.emit(json!({"iota": i, "phi": f}), vec![format!("iota={i} phi={f}")])
            }
            Command::Cycle { word: w, times, .. } | Command::Decycle { word: w, times, .. } => {
                let x = word(w)?;
                let cyc = matches!(cmd, Command::Cycle { .. });
                let mut y = x.clone();
                let mut conj = NormalForm::identity(g);
                for _ in 0..*times {
                    let c = if cyc {
                        NormalForm::from_simple(g, y.initial_factor())
                    } else {
                        NormalForm::from_simple(g, y.final_factor()).inverse()
                    };
                    y = y.conjugate(&c);
                    conj = conj.multiply(&c);
                }
                self.emit(
                    json!({"result": y, "conjugator": conj}),
                    vec![y.to_string(), format!("conjugator: {conj}")],
                )
            }
            Command::Sss { word: w, .. } => {
                let x = word(w)?;
                let (s, c) = to_sss(&x)?;
                self.emit(
                    json!({"representative": s, "conjugator": c, "inf": s.inf(), "sup": s.sup()}),
                    vec![
                        s.to_string(),
                        format!("conjugator: {c}"),
                        format!("inf={} sup={}", s.inf(), s.sup()),
                    ],
                )
            }
            Command::Uss { word: w, .. } => {
                let graph = uss_with(&word(w)?, &self.opts)?;
                let orbits: Vec<Vec<String>> = graph
                    .orbits()
                    .iter()
                    .map(|o| o.iter().map(|&i| graph.vertices()[i].to_string()).collect())
                    .collect();
                let mut text = vec![format!(
                    "{} elements, {} orbits",
                    graph.len(),
                    graph.orbits().len()
                )];
                for (k, o) in orbits.iter().enumerate() {
                    text.push(format!("orbit {}:", k + 1));
                    text.extend(o.iter().map(|v| format!("  {v}")));
                }
                self.emit(json!({"size": graph.len(), "orbits": orbits}), text)
            }
            Command::UssGraph { word: w, .. } => {
                let graph = uss_with(&word(w)?, &self.opts)?;
                if self.json {
                    Outcome::ok(pretty(&graph.to_json()))
                } else {
                    Outcome::ok(graph.to_dot())
                }
            }
            Command::Rigidity { word: w, .. } => {
                let x = word(w)?;
                let r = rigidity(&x);
                self.emit(
                    json!({"rigidity": r.to_string(), "rigid": is_rigid(&x)}),
                    vec![r.to_string()],
                )
            }
            Command::RigidPower { word: w, .. } => {
                let x = word(w)?;
                match rigid_power(&x) {
                    Ok(report) => {
                        let text = pretty(&serde_json::to_value(&report).expect("report serializes"));
                        if report.result.is_some() {
                            Outcome::ok(text)
                        } else {
                            Outcome::negative(text)
                        }
                    }
                    Err(GarsideError::DeltaPower) => {
                        Outcome::negative("no rigid power: the element is a power of Δ\n".into())
                    }
                    Err(e) => return Err(e),
                }
            }
            Command::Conj { left, right, .. } => {
                let (x, y) = (word(left)?, word(right)?);
                match solve_conjugacy_with(&x, &y, &self.opts)? {
                    Some(c) => self.emit(json!({"conjugate": true, "conjugator": c}), vec![c.to_string()]),
                    None => {
                        let mut out = self.emit(json!({"conjugate": false}), vec!["not conjugate".into()]);
                        out.code = 1;
                        out
                    }
                }
            }
            Command::Stabilize { word: w, from, to, .. } => {
                let x = word(w)?;
                let d = g.delta_length() as i64;
                let (a, b) = (from.unwrap_or(-d), to.unwrap_or(d));
                if a > b {
                    return Ok(Outcome::usage(format!("empty window [{a}, {b}]")));
                }
                let (v, c) = stabilize_powers(&x, a, b)?;
                self.emit(
                    json!({"window": [a, b], "stabilized": v, "conjugator": c}),
                    vec![v.to_string(), format!("conjugator: {c}")],
                )
            }
            Command::Chains { word: w, .. } => self.chains(g, &word(w)?)?,
            Command::RandomStats { count, length, seed, .. } => {
                Outcome::ok(random_stats(g, *count, *length, *seed, &self.opts))
            }
        })
    }

    fn chains<G: GarsideStructure>(&self, g: G, x: &NormalForm<G>) -> Result<Outcome> {
        let (y, conj) = to_uss(x)?;
        let simple = |s: &G::Simple| format_simple(&g, s);
        if y.canonical_length() == 0 {
            return Ok(self.emit(
                json!({"representative": y, "conjugator": conj, "orbit": [y]}),
                vec![y.to_string(), "canonical length 0: no chains".into()],
            ));
        }
        let rec = CyclingRecord::new(&y)?;
        let n = rec.orbit_len() as i64;
        let c: Vec<String> = (1..=n).map(|i| simple(rec.c(i))).collect();
        let r: Vec<String> = (1..=n).map(|i| rec.r(i).to_string()).collect();
        let abs = if y.canonical_length() > 1 {
            let f = absolute_final_factor(&rec)?;
            let i = absolute_initial_factor(&rec)?;
            let fs: Vec<usize> = (0..n).map(|k| final_chain_stabilization(&rec, k)).collect::<Result<_>>()?;
            let is: Vec<usize> = (0..n).map(|k| initial_chain_stabilization(&rec, k)).collect::<Result<_>>()?;
            Some((simple(&f), simple(&i), fs, is))
        } else {
            None
        };
        let mut text = vec![
            format!("representative: {y}"),
            format!("conjugator: {conj}"),
            format!("orbit length: {n}"),
        ];
        for i in 0..n as usize {
            text.push(format!("C_{} = {}  R_{} = {}", i + 1, c[i], i + 1, r[i]));
        }
        let js = match &abs {
            Some((f, i, fs, is)) => {
                text.push(format!("F = {f}"));
                text.push(format!("I = {i}"));
                text.push(format!("final chain stabilizes at {fs:?}"));
                text.push(format!("initial chain stabilizes at {is:?}"));
                json!({
                    "representative": y, "conjugator": conj, "C": c, "R": r,
                    "F": f, "I": i, "final_stabilization": fs, "initial_stabilization": is,
                })
            }
            None => {
                text.push("canonical length 1: absolute factors need length above 1".into());
                json!({"representative": y, "conjugator": conj, "C": c, "R": r, "F": null, "I": null})
            }
        };
        Ok(self.emit(js, text))
    }
}

fn nf_json<G: GarsideStructure>(x: &NormalForm<G>) -> Value {
    json!({
        "normal_form": x,
        "inf": x.inf(),
        "sup": x.sup(),
        "length": x.canonical_length(),
    })
}

fn spell(word: &[i64]) -> String {
    word.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
}

/// CSV rows `hash,inf,sup,length,uss_size,orbits,rigidity,status` for `count`
/// random words of `length` letters, followed by a `#` summary line.
pub fn random_stats<G: GarsideStructure>(
    g: G,
    count: usize,
    length: usize,
    seed: u64,
    opts: &SearchOptions,
) -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let atoms = g.atom_count() as i64;
    let mut out = String::from("hash,inf,sup,length,uss_size,orbits,rigidity,status\n");
    let (mut one, mut two, mut other, mut capped) = (0usize, 0usize, 0usize, 0usize);
    for _ in 0..count {
        let w: Vec<i64> = (0..length)
            .map(|_| {
                let a = rng.gen_range(1..=atoms);
                if rng.gen_bool(0.5) { a } else { -a }
            })
            .collect();
        let digest = Sha256::digest(spell(&w).as_bytes());
        let hash: String = digest[..8].iter().map(|b| format!("{b:02x}")).collect();
        let x = normalize(&w, g).expect("generated atoms are in range");
        let (s, _) = to_sss(&x).expect("summit reduction terminates");
        match uss_with(&x, opts) {
            Ok(graph) => {
                let orbits = graph.orbits().len();
                match orbits {
                    1 => one += 1,
                    2 => two += 1,
                    _ => other += 1,
                }
                writeln!(
                    out,
                    "{hash},{},{},{},{},{orbits},{},ok",
                    s.inf(),
                    s.sup(),
                    s.canonical_length(),
                    graph.len(),
                    rigidity(&graph.vertices()[0]),
                )
                .unwrap();
            }
            Err(_) => {
                capped += 1;
                writeln!(out, "{hash},{},{},{},,,,capped", s.inf(), s.sup(), s.canonical_length()).unwrap();
            }
        }
    }
    let done = one + two + other;
    let frac = if done == 0 { 0.0 } else { (one + two) as f64 / done as f64 };
    writeln!(
        out,
        "# samples={count} one_orbit={one} two_orbits={two} more_orbits={other} capped={capped} one_or_two_fraction={frac:.3}"
    )
    .unwrap();
    out
}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
mod book_cli {}
