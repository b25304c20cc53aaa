//! Trajectory CSV: header `t,w1,...,wd`, 17 significant digits, LF endings.

use std::io::{self, BufRead, Write};

use thiserror::Error;

use super::{MultiOrder, Trajectory};

#[derive(Debug, Error)]
pub enum CsvError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
}

/// Writes `t,w1,...,wd` rows. Times are `n·h`.
pub fn write_csv(traj: &Trajectory, mut out: impl Write) -> io::Result<()> {
    let header: Vec<String> = std::iter::once("t".to_string())
        .chain((1..=traj.dim()).map(|i| format!("w{i}")))
        .collect();
    out.write_all(header.join(",").as_bytes())?;
    out.write_all(b"\n")?;
    let mut line = String::new();
    for (n, row) in traj.rows().enumerate() {
        line.clear();
        line.push_str(&format!("{:.16e}", traj.time(n)));
        for x in row {
            line.push_str(&format!(",{x:.16e}"));
        }
        line.push('\n');
        out.write_all(line.as_bytes())?;
    }
    Ok(())
}

/// Reads a file produced by [`write_csv`]. The step is taken from the
/// second time stamp.
pub fn read_csv(input: impl BufRead, orders: MultiOrder) -> Result<Trajectory, CsvError> {
    let mut lines = input.lines();
    let header = lines.next().ok_or(CsvError::Format {
        line: 1,
        message: "empty file".into(),
    })??;
    let cols: Vec<&str> = header.split(',').collect();
    let d = cols.len().saturating_sub(1);
    let expected: Vec<String> = std::iter::once("t".to_string())
        .chain((1..=d).map(|i| format!("w{i}")))
        .collect();
    if d == 0 || cols != expected {
        return Err(CsvError::Format {
            line: 1,
            message: format!("unexpected header `{header}`"),
        });
    }
    let mut times = Vec::new();
    let mut rows = Vec::new();
    for (k, line) in lines.enumerate() {
        let line = line?;
        let line_no = k + 2;
        let values: Result<Vec<f64>, _> = line.split(',').map(str::parse::<f64>).collect();
        let values = values.map_err(|e| CsvError::Format {
            line: line_no,
            message: e.to_string(),
        })?;
        if values.len() != d + 1 {
            return Err(CsvError::Format {
                line: line_no,
                message: format!("expected {} columns, found {}", d + 1, values.len()),
            });
        }
        times.push(values[0]);
        rows.push(values[1..].to_vec());
    }
    let step = if times.len() >= 2 { times[1] - times[0] } else { 0.0 };
    Trajectory::from_rows(orders, step, rows).map_err(|e| CsvError::Format {
        line: 1,
        message: e.to_string(),
    })
}
