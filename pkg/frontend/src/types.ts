// Wire types mirroring the HTTP API's JSON shapes.

export interface User {
  id: string;
  email: string;
  display_name: string;
  role: "contributor" | "admin";
  is_demo: boolean;
  is_active: boolean;
  created_at: string;
}

export interface AuthResult {
  token: string;
  expires_at: string;
  user: User;
}

export interface Project {
  id: string;
  name: string;
  is_active: boolean;
  created_at: string;
}

export interface FileMeta {
  id: string;
  project_id: string;
  relative_path: string;
  required_responses: number;
  is_accepting: boolean;
  created_at: string;
}

export interface HighlightToken {
  kind: string;
  start: number; // byte offset into the UTF-8 encoding of content
  length: number; // bytes
  line: number;
  column: number;
}

export interface FileView extends FileMeta {
  project_name: string;
  content: string;
  tokens: HighlightToken[];
}

export interface NextFile {
  exhausted: boolean;
  file: FileMeta | null;
}

export interface PatternOption {
  id: string;
  name: string;
  is_listed: boolean;
  is_active?: boolean;
}

export interface ResponseFields {
  pattern_name: string;
  pattern_explanation: string;
  confidence_level: number;
  confidence_explanation: string;
  summary: string;
  notes: string;
}

export interface StoredResponse extends ResponseFields {
  id: string;
  file_id: string;
  user_id: string;
  version_seq: number;
  submitted_at: string;
}

export interface ResponseRow {
  project: string;
  file_path: string;
  contributor_email: string;
  pattern: string;
  pattern_explanation: string;
  confidence_level: number;
  confidence_explanation: string;
  summary: string;
  notes: string;
  version_seq: number;
  submitted_at: string;
  file_id: string;
  user_id: string;
}

export interface ResponseTable {
  total: number;
  rows: ResponseRow[];
}

export interface UploadJob {
  id: string;
  project_id: string;
  state: "pending" | "extracting" | "completed" | "failed";
  files_total: number;
  files_registered: number;
  entries_skipped: number;
  error_detail: string | null;
  started_at: string;
  finished_at: string | null;
}

export interface AggregateEntry {
  file_id: string;
  project: string | null;
  file_path: string | null;
  weights: Record<string, number>;
  consensus: string;
  agreement: number;
  responder_count: number;
}

export interface AggregateReport {
  files: AggregateEntry[];
  mean_agreement: number | null;
}

export interface Settings {
  default_required_responses: number;
  demo_mode: boolean;
  demo_retention_days: number;
}

export type SortDirection = "asc" | "desc";

export interface TableQuery {
  q?: string;
  filters: Record<string, string>;
  sorts: Array<[string, SortDirection]>;
}

export const EXPORT_COLUMNS = [
  "project",
  "file_path",
  "contributor_email",
  "pattern",
  "pattern_explanation",
  "confidence_level",
  "confidence_explanation",
  "summary",
  "notes",
  "version_seq",
  "submitted_at",
] as const;

export type ExportColumn = (typeof EXPORT_COLUMNS)[number];
