//! Report emission to standard output or a file.

use std::path::Path;

use ideal_lab::Report;

pub fn emit(content: &str, output: Option<&Path>) -> Result<(), String> {
    match output {
        None => {
            print!("{content}");
            Ok(())
        }
        Some(path) => std::fs::write(path, content)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
    }
}

pub fn emit_report(report: &Report, as_json: bool, output: Option<&Path>) -> Result<(), String> {
    let rendered = if as_json {
        report.to_json().to_string() + "\n"
    } else {
        report.render_text() + "\n"
    };
    emit(&rendered, output)
}
