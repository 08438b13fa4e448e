use epsfkit_core::{format_sp, BBoxSource, FigurePlan};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Serialize)]
pub struct BoxJson<'a> {
    pub llx: &'a str,
    pub lly: &'a str,
    pub urx: &'a str,
    pub ury: &'a str,
    pub source: &'static str,
}

impl<'a> BoxJson<'a> {
    pub fn new(texts: [&'a str; 4], source: BBoxSource) -> Self {
        let [llx, lly, urx, ury] = texts;
        BoxJson {
            llx,
            lly,
            urx,
            ury,
            source: source.label(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct PlanJson<'a> {
    pub filename: &'a str,
    pub bbox: BoxJson<'a>,
    pub width_sp: i32,
    pub height_sp: i32,
    pub width: String,
    pub height: String,
    pub rwi: u32,
    pub rhi: Option<u32>,
    pub clip: bool,
    pub special: &'a str,
}

impl<'a> PlanJson<'a> {
    pub fn new(plan: &'a FigurePlan) -> Self {
        let bbox = plan.bbox();
        PlanJson {
            filename: plan.filename(),
            bbox: BoxJson::new(bbox.texts(), bbox.source),
            width_sp: plan.width().get(),
            height_sp: plan.height().get(),
            width: format_sp(plan.width()),
            height: format_sp(plan.height()),
            rwi: plan.rwi(),
            rhi: plan.rhi(),
            clip: plan.clip(),
            special: plan.special(),
        }
    }
}

pub fn plan_text(plan: &FigurePlan) -> String {
    format!(
        "{}\nwidth: {}sp ({})\nheight: {}sp ({})",
        plan.special(),
        plan.width().get(),
        format_sp(plan.width()),
        plan.height().get(),
        format_sp(plan.height()),
    )
}

pub fn bbox_text(name: &str, texts: [&str; 4], source: BBoxSource) -> String {
    format!("{name}: {} ({})", texts.join(" "), source.label())
}

pub fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report values always serialize")
}
