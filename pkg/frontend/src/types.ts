// Payload shapes of the five API endpoints. The UI renders these
// verbatim: no re-sorting, no re-scoring, no text processing.

export interface SearchHit {
  doc_id: string;
  score: number;
  title: string;
}

export interface EntitySpan {
  class: string;
  surface: string;
  start: number;
  end: number;
  normalized: string | null;
}

export interface AbstractSentence {
  index: number;
  text: string;
  entities: EntitySpan[];
}

export interface ParagraphPayload {
  paragraph_id: string;
  text: string;
  entities: EntitySpan[];
}

export interface SectionPayload {
  section_id: number;
  title: string;
  paragraphs: ParagraphPayload[];
}

export interface ArticlePayload {
  doc_id: string;
  title: string;
  abstract: AbstractSentence[];
  sections: SectionPayload[];
}

export interface CondensedEntry {
  qs_index: number;
  section_id: number;
  paragraph_id: string;
  rss: { coverage: number; spread: number; rss: number };
  scores: { io: number; pr_isr: number };
}

export interface CondensedPayload {
  doc_id: string;
  entries: CondensedEntry[];
  rendered_paragraph_ids: string[];
}

export interface CondensedSingle {
  doc_id: string;
  qs_index: number;
  entry: CondensedEntry | null;
}

export interface EntityFrequency {
  class: string;
  key: string;
  count: number;
}

export interface HealthPayload {
  status: string;
  doc_count: number;
}
