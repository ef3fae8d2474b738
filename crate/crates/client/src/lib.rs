//! Thin synchronous client for the congruing service: path helpers, JSON
//! in, JSON out. The CLI and any other consumer decide what to do with the
//! values; this crate only owns transport and the error envelope.

use serde_json::Value;

#[derive(Debug)]
pub enum ClientError {
    /// The server answered with a non-success status; the body is the
    /// machine-readable error object when one was provided.
    Status {
        status: u16,
        body: Value,
    },
    Transport(String),
}

impl std::fmt::Display for ClientError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ClientError::Status { status, body } => write!(f, "HTTP {status}: {body}"),
            ClientError::Transport(msg) => write!(f, "transport error: {msg}"),
        }
    }
}

impl std::error::Error for ClientError {}

pub type Result<T> = std::result::Result<T, ClientError>;

pub struct Client {
    base_url: String,
    agent: ureq::Agent,
}

impl Client {
    pub fn new(base_url: impl Into<String>) -> Self {
        let mut base_url = base_url.into();
        while base_url.ends_with('/') {
            base_url.pop();
        }
        Client {
            base_url,
            agent: ureq::Agent::new_with_defaults(),
        }
    }

    /// GET with query pairs, returning the parsed JSON body. Error statuses
    /// carry the server's machine-readable error object.
    pub fn get(&self, path: &str, query: &[(&str, String)]) -> Result<Value> {
        let mut request = self
            .agent
            .get(format!("{}{path}", self.base_url))
            .config()
            .http_status_as_error(false)
            .build();
        for (k, v) in query {
            request = request.query(*k, v);
        }
        let mut response = request
            .call()
            .map_err(|e| ClientError::Transport(e.to_string()))?;
        let status = response.status().as_u16();
        let body: Value = response
            .body_mut()
            .read_json()
            .map_err(|e| ClientError::Transport(format!("bad JSON body: {e}")))?;
        if (200..300).contains(&status) {
            Ok(body)
        } else {
            Err(ClientError::Status { status, body })
        }
    }

    pub fn post(&self, path: &str, body: &Value) -> Result<Value> {
        let mut response = self
            .agent
            .post(format!("{}{path}", self.base_url))
            .config()
            .http_status_as_error(false)
            .build()
            .send_json(body)
            .map_err(|e| ClientError::Transport(e.to_string()))?;
        let status = response.status().as_u16();
        let parsed: Value = response
            .body_mut()
            .read_json()
            .map_err(|e| ClientError::Transport(format!("bad JSON body: {e}")))?;
        if (200..300).contains(&status) {
            Ok(parsed)
        } else {
            Err(ClientError::Status {
                status,
                body: parsed,
            })
        }
    }

    pub fn health(&self) -> Result<Value> {
        self.get("/v1/health", &[])
    }

    pub fn fields(&self) -> Result<Value> {
        self.get("/v1/fields", &[])
    }
}
