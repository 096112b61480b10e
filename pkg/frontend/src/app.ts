import { ApiClient, ApiError } from "./api.js";
import { allClassesVisible, decorate, ENTITY_CLASSES } from "./highlight.js";
import { parseHash, toHash, type ViewState } from "./state.js";
import type {
  ArticlePayload,
  CondensedEntry,
  EntityFrequency,
  SearchHit,
} from "./types.js";

/** Two-panel reader over the condensedly API.
 *
 * All ordering and scoring comes verbatim from API payloads; the UI only
 * decorates and navigates. State (query, article, selected sentence) is
 * mirrored in the location hash so a reload reproduces the view.
 */
export class App {
  state: ViewState = { query: "", docId: null, qsIndex: null };
  toggles: Set<string> = allClassesVisible();

  private article: ArticlePayload | null = null;
  private entities: EntityFrequency[] = [];
  private lastEntry: CondensedEntry | null = null;
  private appliedHash = "";
  private rendered = false;

  constructor(
    private root: HTMLElement,
    private api: ApiClient,
  ) {}

  async start(): Promise<void> {
    this.renderSkeleton();
    window.addEventListener("hashchange", () => {
      void this.applyHash(window.location.hash);
    });
    await this.applyHash(window.location.hash);
  }

  /** Route the given hash; no-op when it is the one we just applied. */
  async applyHash(hash: string): Promise<void> {
    if (!this.root.isConnected) return; // replaced by another app instance
    if (this.rendered && hash === this.appliedHash) return;
    this.rendered = true;
    this.appliedHash = hash;
    this.state = parseHash(hash);
    const input = this.root.querySelector<HTMLInputElement>("#search-input");
    if (input) input.value = this.state.query;
    if (this.state.docId !== null) {
      await this.openArticle(this.state.docId, this.state.qsIndex);
    } else if (this.state.query) {
      await this.runSearch(this.state.query, false);
    } else {
      this.view().replaceChildren(emptyStateNode("Search the corpus above."));
    }
  }

  private syncHash(): void {
    const hash = toHash(this.state);
    this.appliedHash = hash;
    if (window.location.hash !== hash) window.location.hash = hash;
  }

  private view(): HTMLElement {
    return this.root.querySelector("#view") as HTMLElement;
  }

  private banner(message: string | null): void {
    const el = this.root.querySelector("#banner") as HTMLElement;
    if (message === null) {
      el.hidden = true;
      el.textContent = "";
    } else {
      el.hidden = false;
      el.textContent = message;
    }
  }

  private renderSkeleton(): void {
    this.root.replaceChildren();
    const header = document.createElement("header");
    const home = document.createElement("a");
    home.id = "home-link";
    home.textContent = "condensedly";
    home.href = "#/";
    header.appendChild(home);
    const form = document.createElement("form");
    form.id = "search-form";
    const input = document.createElement("input");
    input.id = "search-input";
    input.type = "search";
    input.placeholder = "p53 AND cancer, pmid:12345, ...";
    const button = document.createElement("button");
    button.type = "submit";
    button.textContent = "Search";
    form.append(input, button);
    form.addEventListener("submit", (event) => {
      event.preventDefault();
      void this.runSearch(input.value, true);
    });
    header.appendChild(form);
    const banner = document.createElement("div");
    banner.id = "banner";
    banner.hidden = true;
    const view = document.createElement("main");
    view.id = "view";
    this.root.append(header, banner, view);
  }

  async runSearch(query: string, updateHash: boolean): Promise<void> {
    this.banner(null);
    this.state = { query, docId: null, qsIndex: null };
    if (updateHash) this.syncHash();
    let hits: SearchHit[];
    try {
      hits = await this.api.search(query);
    } catch (error) {
      this.showError(error);
      return;
    }
    this.renderResults(hits);
  }

  private renderResults(hits: SearchHit[]): void {
    const list = document.createElement("ul");
    list.id = "results";
    if (hits.length === 0) {
      list.appendChild(emptyStateNode("No matching articles."));
    }
    for (const hit of hits) {
      const row = document.createElement("li");
      row.className = "result-row";
      row.dataset.doc = hit.doc_id;
      const title = document.createElement("a");
      title.textContent = hit.title || hit.doc_id;
      title.href = toHash({ ...this.state, docId: hit.doc_id, qsIndex: null });
      const meta = document.createElement("span");
      meta.className = "result-meta";
      meta.textContent = `${hit.doc_id} · ${hit.score}`;
      row.append(title, meta);
      list.appendChild(row);
    }
    this.view().replaceChildren(list);
  }

  async openArticle(docId: string, qsIndex: number | null): Promise<void> {
    this.banner(null);
    this.state = { ...this.state, docId, qsIndex: null };
    try {
      const [article, entities] = await Promise.all([
        this.api.article(docId),
        this.api.entities(docId),
      ]);
      this.article = article;
      this.entities = entities;
    } catch (error) {
      if (error instanceof ApiError && error.status === 404) {
        this.view().replaceChildren(
          emptyStateNode(`Article ${docId} not found.`),
        );
        return;
      }
      this.showError(error);
      return;
    }
    this.lastEntry = null;
    this.renderArticle();
    if (qsIndex !== null) await this.selectSentence(qsIndex);
  }

  private renderArticle(): void {
    if (!this.article) return;
    const wrap = document.createElement("div");
    wrap.id = "article-view";
    wrap.append(this.renderEntityPanel(), this.renderArticlePanel());
    this.view().replaceChildren(wrap);
  }

  private renderEntityPanel(): HTMLElement {
    const aside = document.createElement("aside");
    aside.id = "entity-panel";
    const togglesBox = document.createElement("div");
    togglesBox.id = "toggles";
    for (const cls of ENTITY_CLASSES) {
      const label = document.createElement("label");
      label.className = "toggle";
      const box = document.createElement("input");
      box.type = "checkbox";
      box.checked = this.toggles.has(cls);
      box.dataset.entityClass = cls;
      box.addEventListener("change", () => this.setToggle(cls, box.checked));
      const chip = document.createElement("span");
      chip.className = `chip entity-${cls.toLowerCase()}`;
      label.append(box, chip, document.createTextNode(cls));
      togglesBox.appendChild(label);
    }
    const list = document.createElement("ul");
    list.id = "entity-list";
    if (this.entities.length === 0) {
      list.appendChild(emptyStateNode("No entities in this article."));
    }
    for (const freq of this.entities) {
      const row = document.createElement("li");
      row.className = "entity-row";
      row.dataset.entityClass = freq.class;
      const chip = document.createElement("span");
      chip.className = `chip entity-${freq.class.toLowerCase()}`;
      chip.dataset.entityClass = freq.class;
      const key = document.createElement("span");
      key.className = "entity-key";
      key.textContent = freq.key;
      const count = document.createElement("span");
      count.className = "entity-count";
      count.textContent = String(freq.count);
      row.append(chip, key, count);
      list.appendChild(row);
    }
    aside.append(togglesBox, list);
    return aside;
  }

  private renderArticlePanel(): HTMLElement {
    const article = this.article!;
    const panel = document.createElement("section");
    panel.id = "article-panel";
    const heading = document.createElement("h1");
    heading.textContent = article.title || article.doc_id;
    panel.appendChild(heading);

    const abstractBox = document.createElement("div");
    abstractBox.id = "abstract";
    for (const sentence of article.abstract) {
      const el = document.createElement("span");
      el.className = "abstract-sentence";
      el.dataset.qs = String(sentence.index);
      el.appendChild(decorate(sentence.text, sentence.entities, this.toggles));
      el.addEventListener("click", () => {
        void this.selectSentence(sentence.index);
      });
      abstractBox.appendChild(el);
      abstractBox.appendChild(document.createTextNode(" "));
    }
    panel.appendChild(abstractBox);

    const notice = document.createElement("div");
    notice.id = "condense-notice";
    notice.hidden = true;
    panel.appendChild(notice);

    const fulltext = document.createElement("div");
    fulltext.id = "fulltext";
    for (const section of article.sections) {
      const sectionEl = document.createElement("section");
      sectionEl.className = "article-section";
      if (section.title) {
        const h2 = document.createElement("h2");
        h2.textContent = section.title;
        sectionEl.appendChild(h2);
      }
      for (const paragraph of section.paragraphs) {
        const p = document.createElement("p");
        p.className = "paragraph";
        p.dataset.pid = paragraph.paragraph_id;
        p.appendChild(
          decorate(paragraph.text, paragraph.entities, this.toggles),
        );
        sectionEl.appendChild(p);
      }
      fulltext.appendChild(sectionEl);
    }
    panel.appendChild(fulltext);
    this.applySelectionMarks(panel);
    return panel;
  }

  /** Re-apply sentence selection, paragraph outline and the score chip
   * after a (re-)render. */
  private applySelectionMarks(panel: HTMLElement): void {
    const qs = this.state.qsIndex;
    if (qs !== null) {
      panel
        .querySelector(`.abstract-sentence[data-qs="${qs}"]`)
        ?.classList.add("selected");
    }
    const entry = this.lastEntry;
    if (entry) {
      const p = panel.querySelector<HTMLElement>(
        `.paragraph[data-pid="${cssEscape(entry.paragraph_id)}"]`,
      );
      if (p) {
        p.classList.add("outlined");
        p.appendChild(scoreChip(entry));
      }
    }
  }

  async selectSentence(qsIndex: number): Promise<void> {
    if (!this.article || this.state.docId === null) return;
    let single;
    try {
      single = await this.api.condensedFor(this.state.docId, qsIndex);
    } catch (error) {
      this.showError(error);
      return; // state unchanged on failure
    }
    this.banner(null);
    this.state = { ...this.state, qsIndex };
    this.lastEntry = single.entry;
    this.syncHash();

    for (const el of this.root.querySelectorAll(".abstract-sentence.selected")) {
      el.classList.remove("selected");
    }
    for (const el of this.root.querySelectorAll(".paragraph.outlined")) {
      el.classList.remove("outlined");
    }
    for (const el of this.root.querySelectorAll(".score-chip")) {
      el.remove();
    }
    this.root
      .querySelector(`.abstract-sentence[data-qs="${qsIndex}"]`)
      ?.classList.add("selected");

    const notice = this.root.querySelector("#condense-notice") as HTMLElement;
    if (single.entry === null) {
      notice.hidden = false;
      notice.textContent = "No associated paragraph for this sentence.";
      return;
    }
    notice.hidden = true;
    notice.textContent = "";
    const target = this.root.querySelector<HTMLElement>(
      `.paragraph[data-pid="${cssEscape(single.entry.paragraph_id)}"]`,
    );
    if (target) {
      target.classList.add("outlined");
      target.appendChild(scoreChip(single.entry));
      target.scrollIntoView?.({ block: "center" });
    }
  }

  setToggle(entityClass: string, visible: boolean): void {
    if (visible) this.toggles.add(entityClass);
    else this.toggles.delete(entityClass);
    if (this.article) {
      // Re-render the article body with the new decoration set; the
      // entity list, selection and outline are preserved.
      this.renderArticle();
    }
  }

  private showError(error: unknown): void {
    if (error instanceof DOMException && error.name === "AbortError") {
      return; // superseded by a newer request
    }
    if (error instanceof ApiError) {
      this.banner(`${error.code}: ${error.message}`);
    } else {
      this.banner(String(error));
    }
  }
}

function scoreChip(entry: CondensedEntry): HTMLElement {
  const chip = document.createElement("span");
  chip.className = "score-chip";
  chip.textContent =
    `io ${entry.scores.io} · pr-isr ${entry.scores.pr_isr} · ` +
    `rss ${entry.rss.rss}`;
  return chip;
}

function emptyStateNode(message: string): HTMLElement {
  const el = document.createElement("li");
  el.className = "empty-state";
  el.textContent = message;
  return el;
}

function cssEscape(value: string): string {
  const css = (globalThis as { CSS?: { escape(v: string): string } }).CSS;
  if (css?.escape) return css.escape(value);
  return value.replace(/([^a-zA-Z0-9_-])/g, "\\$1");
}
