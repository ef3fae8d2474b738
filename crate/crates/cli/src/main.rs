//! Command-line front end. Every subcommand is a client of the HTTP/JSON
//! service: with --server it talks to a running congruing-server, otherwise
//! it drives the same router in process, so output is identical either way.
//! Each invocation prints a single JSON object to standard output.

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use congruing_client::{Client, ClientError};
use congruing_server::{assemble_catalog, build_router, oneshot_blocking, AppState};

#[derive(Parser)]
#[command(
    name = "congruing",
    about = "Orders and structures of first cohomology of moduli of formal modules: minimal n-congruing ideals, straightening transforms, and arithmetic-equivalence decisions"
)]
struct Cli {
    /// Base URL of a running congruing-server; without it the computation
    /// runs in process against the same API.
    #[arg(long, env = "CONGRUING_SERVER", global = true)]
    server: Option<String>,

    /// Field catalog path (JSON file or directory), merged over the
    /// built-in fleet. Only used in in-process mode.
    #[arg(long, env = "CONGRUING_CATALOG", global = true)]
    catalog: Option<PathBuf>,

    /// Also expand factored values to plain decimal strings.
    #[arg(long, global = true)]
    expand: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Splitting data (e, f, g) of a prime in a catalog field.
    Split {
        #[arg(long)]
        field: String,
        #[arg(long)]
        p: u64,
    },
    /// The prime-power-ramification discriminant of a field.
    PprDisc {
        #[arg(long)]
        field: String,
    },
    /// Order and abelian-group structure of Ext^{1,2n} after inverting
    /// (default: the ppr discriminant).
    Ext1 {
        #[arg(long)]
        field: String,
        #[arg(long, allow_negative_numbers = true, conflicts_with = "grading")]
        n: Option<i64>,
        /// Full internal grading t; odd t gives the trivial group.
        #[arg(long, allow_negative_numbers = true)]
        grading: Option<i64>,
        #[arg(long)]
        invert: Option<String>,
    },
    /// The minimal n-congruing quotient A/J_n (same pipeline as ext1).
    Congruing {
        #[arg(long)]
        field: String,
        #[arg(long)]
        n: i64,
        #[arg(long)]
        invert: Option<String>,
        /// "error" (default) or "oracle": how to treat non-inverted primes
        /// outside the proven closed-form range.
        #[arg(long)]
        integer_case: Option<String>,
    },
    /// Straightening transform of an Euler product, from a catalog field
    /// or an Euler-product document.
    Straighten {
        /// Euler-product JSON document.
        #[arg(long, conflicts_with_all = ["field", "conductor"])]
        euler: Option<PathBuf>,
        #[arg(long)]
        field: Option<String>,
        /// Conductor of the trivial Grossencharakter (default: the ppr
        /// discriminant).
        #[arg(long)]
        conductor: Option<String>,
        #[arg(long)]
        n: u64,
        /// "s" (unramified) or "gd" (Galois-Dedekind).
        #[arg(long)]
        kind: String,
    },
    /// Inverse Galois-Dedekind transform of tabulated values.
    GdInvert {
        /// JSON file: {"bound": int?, "values": {"n": {prime: exponent}}}.
        #[arg(long)]
        euler_values: PathBuf,
        /// Comma-separated primes to reconstruct factors at.
        #[arg(long, value_delimiter = ',')]
        primes: Vec<u64>,
    },
    /// Denominator of zeta(1-n) as a factored integer.
    ZetaDenominator {
        #[arg(long)]
        n: u64,
    },
    /// The exact Bernoulli number B_n.
    Bernoulli {
        #[arg(long)]
        n: u64,
    },
    /// Arithmetic equivalence modulo m, with the full cross-check.
    Equiv {
        #[arg(long)]
        field: String,
        #[arg(long)]
        field2: String,
        #[arg(long = "mod")]
        modulus: String,
        #[arg(long)]
        n_bound: Option<u64>,
        #[arg(long)]
        prime_bound: Option<u64>,
    },
    /// Run an oracle cross-check suite; exits 0 iff every cell passes.
    Verify {
        /// local | global | zeta | roundtrip | equiv
        #[arg(long)]
        suite: String,
    },
}

/// Percent-encode a path segment or query value.
fn encode_segment(s: &str) -> String {
    let mut out = String::new();
    for b in s.bytes() {
        match b {
            b'a'..=b'z' | b'A'..=b'Z' | b'0'..=b'9' | b'-' | b'_' | b'.' | b'~' => {
                out.push(b as char)
            }
            _ => out.push_str(&format!("%{b:02X}")),
        }
    }
    out
}

struct Request {
    method: &'static str,
    path: String,
    query: Vec<(&'static str, String)>,
    body: Option<Value>,
}

impl Request {
    fn get(path: String) -> Self {
        Request {
            method: "GET",
            path,
            query: Vec::new(),
            body: None,
        }
    }

    fn post(path: String, body: Value) -> Self {
        Request {
            method: "POST",
            path,
            query: Vec::new(),
            body: Some(body),
        }
    }

    fn with(mut self, key: &'static str, value: Option<String>) -> Self {
        if let Some(v) = value {
            self.query.push((key, v));
        }
        self
    }

    fn uri(&self) -> String {
        if self.query.is_empty() {
            return self.path.clone();
        }
        let qs: Vec<String> = self
            .query
            .iter()
            .map(|(k, v)| format!("{k}={}", encode_segment(v)))
            .collect();
        format!("{}?{}", self.path, qs.join("&"))
    }

    fn query_pairs(&self) -> Vec<(&str, String)> {
        self.query.iter().map(|(k, v)| (*k, v.clone())).collect()
    }
}

fn read_json_file(path: &PathBuf) -> Result<Value, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {path:?}: {e}"))?;
    serde_json::from_str(&text).map_err(|e| format!("bad JSON in {path:?}: {e}"))
}

fn build_request(command: &Command, expand: bool) -> Result<Request, String> {
    let expand_param = expand.then(|| "true".to_string());
    Ok(match command {
        Command::Split { field, p } => {
            Request::get(format!("/v1/fields/{}/split", encode_segment(field)))
                .with("p", Some(p.to_string()))
        }
        Command::PprDisc { field } => {
            Request::get(format!("/v1/fields/{}/ppr-disc", encode_segment(field)))
                .with("expand", expand_param)
        }
        Command::Ext1 {
            field,
            n,
            grading,
            invert,
        } => {
            if n.is_none() && grading.is_none() {
                return Err("ext1 needs --n or --grading".into());
            }
            Request::get(format!("/v1/fields/{}/ext1", encode_segment(field)))
                .with("n", n.map(|v| v.to_string()))
                .with("grading", grading.map(|v| v.to_string()))
                .with("invert", invert.clone())
                .with("expand", expand_param)
        }
        Command::Congruing {
            field,
            n,
            invert,
            integer_case,
        } => Request::get(format!("/v1/fields/{}/congruing", encode_segment(field)))
            .with("n", Some(n.to_string()))
            .with("invert", invert.clone())
            .with("integer_case", integer_case.clone())
            .with("expand", expand_param),
        Command::Straighten {
            euler,
            field,
            conductor,
            n,
            kind,
        } => match (euler, field) {
            (Some(path), None) => {
                let doc = read_json_file(path)?;
                Request::post(
                    "/v1/straighten".into(),
                    json!({"kind": kind, "n": n, "euler": doc, "expand": expand}),
                )
            }
            (None, Some(field)) => {
                Request::get(format!("/v1/fields/{}/straighten", encode_segment(field)))
                    .with("kind", Some(kind.clone()))
                    .with("n", Some(n.to_string()))
                    .with("conductor", conductor.clone())
                    .with("expand", expand_param)
            }
            _ => return Err("straighten needs exactly one of --euler or --field".into()),
        },
        Command::GdInvert {
            euler_values,
            primes,
        } => {
            let doc = read_json_file(euler_values)?;
            let (values, bound) = match &doc {
                Value::Object(map) if map.contains_key("values") => (
                    map["values"].clone(),
                    map.get("bound").cloned().unwrap_or(Value::Null),
                ),
                other => (other.clone(), Value::Null),
            };
            Request::post(
                "/v1/gd-invert".into(),
                json!({"values": values, "bound": bound, "primes": primes}),
            )
        }
        Command::ZetaDenominator { n } => {
            Request::get("/v1/zeta-denominator".into()).with("n", Some(n.to_string()))
        }
        Command::Bernoulli { n } => {
            Request::get("/v1/bernoulli".into()).with("n", Some(n.to_string()))
        }
        Command::Equiv {
            field,
            field2,
            modulus,
            n_bound,
            prime_bound,
        } => Request::get("/v1/equiv".into())
            .with("field1", Some(field.clone()))
            .with("field2", Some(field2.clone()))
            .with("mod", Some(modulus.clone()))
            .with("n_bound", n_bound.map(|v| v.to_string()))
            .with("prime_bound", prime_bound.map(|v| v.to_string())),
        Command::Verify { suite } => Request::post("/v1/verify".into(), json!({"suite": suite})),
    })
}

fn execute(cli: &Cli, request: &Request) -> Result<(u16, Value), String> {
    if let Some(server) = &cli.server {
        let client = Client::new(server.clone());
        let result = match request.method {
            "GET" => client.get(&request.path, &request.query_pairs()),
            _ => client.post(&request.path, request.body.as_ref().unwrap_or(&Value::Null)),
        };
        match result {
            Ok(value) => Ok((200, value)),
            Err(ClientError::Status { status, body }) => Ok((status, body)),
            Err(ClientError::Transport(msg)) => Err(msg),
        }
    } else {
        let catalog =
            assemble_catalog(cli.catalog.as_deref()).map_err(|e| format!("catalog error: {e}"))?;
        let router = build_router(AppState::new(catalog));
        oneshot_blocking(
            router,
            request.method,
            &request.uri(),
            request.body.as_ref(),
        )
    }
}

fn main() {
    let cli = Cli::parse();
    let request = match build_request(&cli.command, cli.expand) {
        Ok(r) => r,
        Err(msg) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
    };
    match execute(&cli, &request) {
        Ok((status, value)) => {
            println!("{value}");
            if (200..300).contains(&status) {
                // verify reports failure through its body, not the status
                if value.get("ok").and_then(Value::as_bool) == Some(false) {
                    std::process::exit(1);
                }
                return;
            }
            let outside_proven_range =
                value["error"]["kind"].as_str() == Some("outside-proven-range");
            std::process::exit(if outside_proven_range { 3 } else { 1 });
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
    }
}
