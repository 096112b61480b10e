// View state is fully URL-addressable via the location hash:
//   #/?q=cancer                     search view
//   #/article/12345?qs=2&q=cancer   article view, sentence 2 selected
// Entity-class visibility toggles are session-local and not in the URL.

export interface ViewState {
  query: string;
  docId: string | null;
  qsIndex: number | null;
}

export function parseHash(hash: string): ViewState {
  const stripped = hash.replace(/^#\/?/, "");
  const [path = "", queryString = ""] = splitOnce(stripped, "?");
  const params = new URLSearchParams(queryString);
  const query = params.get("q") ?? "";
  const parts = path.split("/").filter(Boolean);
  if (parts[0] === "article" && parts[1]) {
    const qsRaw = params.get("qs");
    const qsIndex = qsRaw !== null && /^\d+$/.test(qsRaw)
      ? Number(qsRaw)
      : null;
    return { query, docId: decodeURIComponent(parts[1]), qsIndex };
  }
  return { query, docId: null, qsIndex: null };
}

export function toHash(state: ViewState): string {
  const params = new URLSearchParams();
  if (state.docId !== null) {
    if (state.qsIndex !== null) params.set("qs", String(state.qsIndex));
    if (state.query) params.set("q", state.query);
    const suffix = params.size ? `?${params}` : "";
    return `#/article/${encodeURIComponent(state.docId)}${suffix}`;
  }
  if (state.query) params.set("q", state.query);
  return params.size ? `#/?${params}` : "#/";
}

function splitOnce(value: string, sep: string): [string, string] {
  const at = value.indexOf(sep);
  if (at < 0) return [value, ""];
  return [value.slice(0, at), value.slice(at + 1)];
}
