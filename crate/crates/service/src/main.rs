use std::net::{IpAddr, SocketAddr};
use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::Parser;
use tracing_subscriber::EnvFilter;
use ziggu_service::sessions::SessionStore;
use ziggu_service::{router, AppState};

#[derive(Parser)]
#[command(name = "ziggu-service", version, about = "JSON API for playing Ziggu puzzles")]
struct Args {
    /// Address to listen on.
    #[arg(long, env = "ZIGGU_ADDR", default_value = "127.0.0.1")]
    addr: IpAddr,
    #[arg(long, env = "ZIGGU_PORT", default_value_t = 8080)]
    port: u16,
    /// Directory of static files served outside /api (the web UI bundle).
    #[arg(long, env = "ZIGGU_STATIC_DIR")]
    static_dir: Option<PathBuf>,
    /// Keep one JSON snapshot per session in this directory.
    #[arg(long, env = "ZIGGU_SNAPSHOT_DIR")]
    snapshot_dir: Option<PathBuf>,
}

#[tokio::main]
async fn main() -> Result<()> {
    tracing_subscriber::fmt()
        .with_env_filter(EnvFilter::try_from_default_env().unwrap_or_else(|_| "info".into()))
        .init();
    let args = Args::parse();

    let sessions = match &args.snapshot_dir {
        Some(dir) => SessionStore::with_snapshots(dir)
            .with_context(|| format!("opening snapshot directory {}", dir.display()))?,
        None => SessionStore::new(),
    };
    if let Some(dir) = &args.static_dir {
        anyhow::ensure!(dir.is_dir(), "static directory {} does not exist", dir.display());
    }
    let app = router(AppState::new(sessions), args.static_dir);

    let addr = SocketAddr::new(args.addr, args.port);
    let listener = tokio::net::TcpListener::bind(addr)
        .await
        .with_context(|| format!("binding {addr}"))?;
    tracing::info!("listening on http://{}", listener.local_addr()?);
    axum::serve(listener, app)
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await?;
    Ok(())
}
