//! Synthetic inputs for the benchmarks.

/// An EPS header with `comments` DSC lines before the bounding box.
pub fn header(comments: usize) -> Vec<String> {
    let mut lines = vec!["%!PS-Adobe-3.0 EPSF-3.0".to_string()];
    lines.extend((0..comments).map(|i| format!("%%Title: figure {i}   with  padding")));
    lines.push("%%BoundingBox: 18 36 594.5 756".to_string());
    lines.push("%%EndComments".to_string());
    lines.push("newpath 0 0 moveto".to_string());
    lines
}

/// Literal bounding boxes from 100bp to 1500bp a side.
pub fn boxes(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| {
            let w = 100 + (i * 7919) % 1400;
            let h = 100 + (i * 104729) % 1400;
            format!(
                "[{} {} {} {}]fig{i}.eps",
                i % 50,
                i % 30,
                i % 50 + w,
                i % 30 + h
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inputs_plan() {
        let mut session = epsfkit_core::Session::default();
        for spec in boxes(100) {
            session.plan(&spec).unwrap();
        }
        let lines = header(5);
        let plan = session
            .plan_lines("h.eps", &mut epsfkit_core::IterLines(lines.iter()))
            .unwrap();
        assert_eq!(plan.bbox().texts(), ["18", "36", "594.5", "756"]);
    }
}
