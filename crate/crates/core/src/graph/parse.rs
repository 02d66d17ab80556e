use super::{valid_name, DirectedGraph, GraphBuilder, GraphError};

pub(super) fn parse_graph(text: &str) -> Result<DirectedGraph, GraphError> {
    let mut builder = GraphBuilder::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let words: Vec<&str> = trimmed.split_whitespace().collect();
        let malformed = |message: String| GraphError::Malformed { line, message };
        for w in &words[1..] {
            if !valid_name(w) {
                return Err(malformed(format!("invalid name `{w}`")));
            }
        }
        let located = |err: GraphError| match err {
            GraphError::Duplicate(name) => GraphError::DuplicateName { line, name },
            GraphError::UnknownVertex(name) => GraphError::UndeclaredVertex { line, name },
            GraphError::TooManyVertices => malformed(err.to_string()),
            other => other,
        };
        match words.as_slice() {
            ["vertex", name] => {
                builder.vertex(name).map_err(located)?;
            }
            ["edge", name, src, dst] => {
                builder.edge(name, src, dst).map_err(located)?;
            }
            ["vertex", ..] => return Err(malformed("expected `vertex NAME`".into())),
            ["edge", ..] => return Err(malformed("expected `edge NAME SRC DST`".into())),
            [other, ..] => return Err(malformed(format!("unknown directive `{other}`"))),
            [] => unreachable!("blank lines are skipped"),
        }
    }
    Ok(builder.build())
}
