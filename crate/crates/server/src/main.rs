use std::path::PathBuf;

use clap::Parser;

use congruing_server::{assemble_catalog, build_router, AppState};

#[derive(Parser)]
#[command(
    name = "congruing-server",
    about = "HTTP/JSON service for congruing computations"
)]
struct Args {
    /// Address to bind.
    #[arg(long, default_value = "127.0.0.1:8787")]
    addr: String,

    /// Field catalog: a JSON document or a directory of them, merged over
    /// the built-in fleet.
    #[arg(long, env = "CONGRUING_CATALOG")]
    catalog: Option<PathBuf>,
}

#[tokio::main]
async fn main() {
    let args = Args::parse();
    let catalog = match assemble_catalog(args.catalog.as_deref()) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("catalog error: {e}");
            std::process::exit(1);
        }
    };
    let names = catalog.names();
    let app = build_router(AppState::new(catalog));
    let listener = match tokio::net::TcpListener::bind(&args.addr).await {
        Ok(l) => l,
        Err(e) => {
            eprintln!("cannot bind {}: {e}", args.addr);
            std::process::exit(1);
        }
    };
    eprintln!(
        "congruing-server listening on {} with fields: {}",
        args.addr,
        names.join(", ")
    );
    if let Err(e) = axum::serve(listener, app).await {
        eprintln!("server error: {e}");
        std::process::exit(1);
    }
}
