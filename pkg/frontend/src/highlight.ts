import type { EntitySpan } from "./types.js";

// The fixed eight-class palette lives in styles.css as .entity-<class>
// rules; this list drives the visibility toggles.
export const ENTITY_CLASSES = [
  "Gene",
  "Chemical",
  "Disease",
  "Drug",
  "SNP",
  "Species",
  "MeSH",
  "Abbreviation",
] as const;

export type EntityClassName = (typeof ENTITY_CLASSES)[number];

export function allClassesVisible(): Set<string> {
  return new Set(ENTITY_CLASSES);
}

/** Wrap entity spans of visible classes in colored <span> elements.
 *
 * The text is cut at every span boundary; each segment is nested inside
 * the spans covering it, outermost ordered by start offset then length
 * descending. Stripping the decoration (textContent) always returns the
 * source text unchanged.
 */
export function decorate(
  text: string,
  entities: EntitySpan[],
  visible: Set<string>,
): DocumentFragment {
  const spans = entities
    .filter(
      (e) =>
        visible.has(e.class) && e.start >= 0 && e.start < e.end &&
        e.end <= text.length,
    )
    .sort((a, b) => a.start - b.start || (b.end - b.start) - (a.end - a.start));
  const boundaries = new Set<number>([0, text.length]);
  for (const span of spans) {
    boundaries.add(span.start);
    boundaries.add(span.end);
  }
  const points = [...boundaries].sort((a, b) => a - b);
  const fragment = document.createDocumentFragment();
  for (let i = 0; i + 1 < points.length; i++) {
    const lo = points[i]!;
    const hi = points[i + 1]!;
    const piece = text.slice(lo, hi);
    if (!piece) continue;
    const covering = spans.filter((s) => s.start <= lo && hi <= s.end);
    let node: Node = document.createTextNode(piece);
    for (let k = covering.length - 1; k >= 0; k--) {
      const cover = covering[k]!;
      const el = document.createElement("span");
      el.className = `entity entity-${cover.class.toLowerCase()}`;
      el.dataset.entityClass = cover.class;
      if (cover.normalized) el.title = cover.normalized;
      el.appendChild(node);
      node = el;
    }
    fragment.appendChild(node);
  }
  return fragment;
}
