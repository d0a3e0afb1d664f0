// Draft responses autosave to browser-local storage, never the server.
// One draft per (user, file); cleared atomically on successful submission.

import type { ResponseFields } from "./types";

export interface DraftResponse extends ResponseFields {
  file_id: string;
  last_edited_at: string;
}

export const DRAFT_DEBOUNCE_MS = 1000;

const draftKey = (userId: string, fileId: string) =>
  `labelsmith.draft.${userId}.${fileId}`;

export function loadDraft(userId: string, fileId: string): DraftResponse | null {
  try {
    const raw = localStorage.getItem(draftKey(userId, fileId));
    return raw ? (JSON.parse(raw) as DraftResponse) : null;
  } catch {
    return null;
  }
}

export function saveDraft(userId: string, fileId: string, fields: ResponseFields): void {
  const draft: DraftResponse = {
    ...fields,
    file_id: fileId,
    last_edited_at: new Date().toISOString(),
  };
  try {
    localStorage.setItem(draftKey(userId, fileId), JSON.stringify(draft));
  } catch {
    // storage quota exceeded; losing the draft is the documented worst case
  }
}

export function clearDraft(userId: string, fileId: string): void {
  try {
    localStorage.removeItem(draftKey(userId, fileId));
  } catch {
    // ignore
  }
}

/** Debounced draft writer: at most the trailing second of typing is at risk. */
export class DraftWriter {
  private timer: ReturnType<typeof setTimeout> | null = null;
  private pending: (() => void) | null = null;

  constructor(
    private userId: string,
    private fileId: string,
    private debounceMs: number = DRAFT_DEBOUNCE_MS,
  ) {}

  schedule(fields: ResponseFields): void {
    this.pending = () => saveDraft(this.userId, this.fileId, fields);
    if (this.timer !== null) clearTimeout(this.timer);
    this.timer = setTimeout(() => this.flush(), this.debounceMs);
  }

  flush(): void {
    if (this.timer !== null) {
      clearTimeout(this.timer);
      this.timer = null;
    }
    if (this.pending) {
      this.pending();
      this.pending = null;
    }
  }

  cancel(): void {
    if (this.timer !== null) {
      clearTimeout(this.timer);
      this.timer = null;
    }
    this.pending = null;
  }
}
