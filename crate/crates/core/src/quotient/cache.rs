use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::{build_certified, build_with_limits, Limits, QuotientError, TruncatedQuotient};
use crate::presentations::PresentationId;

type Slot = Arc<OnceLock<Result<Arc<TruncatedQuotient>, QuotientError>>>;

/// Shared build cache keyed by (presentation, bound, headroom). Concurrent
/// requests for the same key wait for a single build.
///
/// A headroom of `None` requests the certified build (automatic headroom).
#[derive(Default)]
pub struct QuotientCache {
    limits: Limits,
    slots: Mutex<HashMap<(PresentationId, u32, Option<u32>), Slot>>,
}

impl QuotientCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_limits(limits: Limits) -> Self {
        QuotientCache { limits, slots: Mutex::new(HashMap::new()) }
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn get(
        &self,
        p: PresentationId,
        bound: u32,
        headroom: Option<u32>,
    ) -> Result<Arc<TruncatedQuotient>, QuotientError> {
        let slot = {
            let mut map = self.slots.lock().expect("cache lock");
            map.entry((p, bound, headroom)).or_default().clone()
        };
        slot.get_or_init(|| {
            let built = match headroom {
                Some(h) => build_with_limits(p, bound, h, self.limits),
                None => build_certified(p, bound, self.limits),
            };
            built.map(Arc::new)
        })
        .clone()
    }

    /// Certified build (automatic headroom).
    pub fn certified(&self, p: PresentationId, bound: u32) -> Result<Arc<TruncatedQuotient>, QuotientError> {
        self.get(p, bound, None)
    }
}
