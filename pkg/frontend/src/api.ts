// HTTP client for the service API. The UI never derives scheduling or
// aggregation itself; every view renders what these calls return.

import type {
  AggregateReport,
  AuthResult,
  FileMeta,
  FileView,
  NextFile,
  PatternOption,
  Project,
  ResponseFields,
  ResponseTable,
  Settings,
  StoredResponse,
  TableQuery,
  UploadJob,
  User,
} from "./types";

export class ApiError extends Error {
  constructor(
    public status: number,
    public code: string,
    message: string,
    public details: string[] = [],
  ) {
    super(message);
  }
}

export interface Api {
  oauthCallback(code: string): Promise<AuthResult>;
  demoLogin(): Promise<AuthResult>;
  me(): Promise<User>;
  nextFile(): Promise<NextFile>;
  patterns(): Promise<PatternOption[]>;
  projects(): Promise<Project[]>;
  projectFiles(projectId: string): Promise<FileMeta[]>;
  file(fileId: string): Promise<FileView>;
  submitResponse(fileId: string, body: ResponseFields): Promise<StoredResponse>;
  myResponses(query: TableQuery): Promise<ResponseTable>;
  myResponsesCsv(query: TableQuery): Promise<string>;
  adminUsers(): Promise<User[]>;
  adminCreateUser(body: { email: string; display_name: string; role: string }): Promise<User>;
  adminPatchUser(id: string, body: Partial<Pick<User, "display_name" | "role" | "is_active">>): Promise<User>;
  adminPatterns(includeInactive?: boolean): Promise<PatternOption[]>;
  adminCreatePattern(body: { name: string; is_listed?: boolean }): Promise<PatternOption>;
  adminPatchPattern(id: string, body: Partial<PatternOption>): Promise<PatternOption>;
  adminUploadProject(name: string, file: Blob, requiredResponses?: number): Promise<UploadJob>;
  adminUploadStatus(jobId: string): Promise<UploadJob>;
  adminPatchFile(
    fileId: string,
    body: { is_accepting?: boolean; required_responses?: number },
  ): Promise<FileMeta>;
  adminResponses(query: TableQuery): Promise<ResponseTable>;
  adminResponsesCsv(query: TableQuery): Promise<string>;
  adminHistory(fileId: string, userId: string): Promise<StoredResponse[]>;
  adminAggregates(): Promise<AggregateReport>;
  adminSettings(): Promise<Settings>;
  adminPatchSettings(body: Partial<Settings>): Promise<Settings>;
}

export function queryParams(query: TableQuery): URLSearchParams {
  const params = new URLSearchParams();
  if (query.q) params.set("q", query.q);
  for (const [column, needle] of Object.entries(query.filters)) {
    if (needle !== "") params.append("filter", `${column}:${needle}`);
  }
  for (const [column, direction] of query.sorts) {
    params.append("sort", `${column}:${direction}`);
  }
  return params;
}

export class HttpApi implements Api {
  constructor(
    private baseUrl: string,
    private token: () => string | null,
  ) {}

  private async request<T>(
    method: string,
    path: string,
    options: { json?: unknown; form?: FormData; text?: boolean } = {},
  ): Promise<T> {
    const headers: Record<string, string> = {};
    const token = this.token();
    if (token) headers["Authorization"] = `Bearer ${token}`;
    let body: BodyInit | undefined;
    if (options.json !== undefined) {
      headers["Content-Type"] = "application/json";
      body = JSON.stringify(options.json);
    } else if (options.form) {
      body = options.form;
    }
    const resp = await fetch(this.baseUrl + path, { method, headers, body });
    if (!resp.ok) {
      let code = `http_${resp.status}`;
      let message = resp.statusText;
      let details: string[] = [];
      try {
        const payload = await resp.json();
        code = payload.code ?? code;
        message = payload.message ?? message;
        details = payload.details ?? [];
      } catch {
        // non-JSON error body
      }
      throw new ApiError(resp.status, code, message, details);
    }
    if (options.text) return (await resp.text()) as unknown as T;
    return (await resp.json()) as T;
  }

  oauthCallback(code: string): Promise<AuthResult> {
    return this.request("POST", "/auth/oauth/callback", { json: { code } });
  }

  demoLogin(): Promise<AuthResult> {
    return this.request("POST", "/auth/demo");
  }

  me(): Promise<User> {
    return this.request("GET", "/me");
  }

  nextFile(): Promise<NextFile> {
    return this.request("GET", "/next-file");
  }

  async patterns(): Promise<PatternOption[]> {
    const body = await this.request<{ patterns: PatternOption[] }>("GET", "/patterns");
    return body.patterns;
  }

  async projects(): Promise<Project[]> {
    const body = await this.request<{ projects: Project[] }>("GET", "/projects");
    return body.projects;
  }

  async projectFiles(projectId: string): Promise<FileMeta[]> {
    const body = await this.request<{ files: FileMeta[] }>(
      "GET",
      `/projects/${projectId}/files?limit=1000`,
    );
    return body.files;
  }

  file(fileId: string): Promise<FileView> {
    return this.request("GET", `/files/${fileId}`);
  }

  submitResponse(fileId: string, body: ResponseFields): Promise<StoredResponse> {
    return this.request("POST", `/files/${fileId}/responses`, { json: body });
  }

  myResponses(query: TableQuery): Promise<ResponseTable> {
    return this.request("GET", `/my-responses?${queryParams(query)}`);
  }

  myResponsesCsv(query: TableQuery): Promise<string> {
    return this.request("GET", `/my-responses/export.csv?${queryParams(query)}`, {
      text: true,
    });
  }

  async adminUsers(): Promise<User[]> {
    const body = await this.request<{ users: User[] }>("GET", "/admin/users?limit=1000");
    return body.users;
  }

  adminCreateUser(body: { email: string; display_name: string; role: string }): Promise<User> {
    return this.request("POST", "/admin/users", { json: body });
  }

  adminPatchUser(
    id: string,
    body: Partial<Pick<User, "display_name" | "role" | "is_active">>,
  ): Promise<User> {
    return this.request("PATCH", `/admin/users/${id}`, { json: body });
  }

  async adminPatterns(includeInactive = false): Promise<PatternOption[]> {
    const body = await this.request<{ patterns: PatternOption[] }>(
      "GET",
      `/admin/patterns?include_inactive=${includeInactive}`,
    );
    return body.patterns;
  }

  adminCreatePattern(body: { name: string; is_listed?: boolean }): Promise<PatternOption> {
    return this.request("POST", "/admin/patterns", { json: body });
  }

  adminPatchPattern(id: string, body: Partial<PatternOption>): Promise<PatternOption> {
    return this.request("PATCH", `/admin/patterns/${id}`, { json: body });
  }

  adminUploadProject(name: string, file: Blob, requiredResponses?: number): Promise<UploadJob> {
    const form = new FormData();
    form.set("name", name);
    form.set("file", file);
    if (requiredResponses !== undefined) {
      form.set("default_required_responses", String(requiredResponses));
    }
    return this.request("POST", "/admin/projects", { form });
  }

  adminUploadStatus(jobId: string): Promise<UploadJob> {
    return this.request("GET", `/admin/uploads/${jobId}`);
  }

  adminPatchFile(
    fileId: string,
    body: { is_accepting?: boolean; required_responses?: number },
  ): Promise<FileMeta> {
    return this.request("PATCH", `/admin/files/${fileId}`, { json: body });
  }

  adminResponses(query: TableQuery): Promise<ResponseTable> {
    return this.request("GET", `/admin/responses?${queryParams(query)}`);
  }

  adminResponsesCsv(query: TableQuery): Promise<string> {
    return this.request("GET", `/admin/responses/export.csv?${queryParams(query)}`, {
      text: true,
    });
  }

  async adminHistory(fileId: string, userId: string): Promise<StoredResponse[]> {
    const body = await this.request<{ versions: StoredResponse[] }>(
      "GET",
      `/admin/responses/${fileId}/${userId}/history`,
    );
    return body.versions;
  }

  adminAggregates(): Promise<AggregateReport> {
    return this.request("GET", "/admin/aggregates");
  }

  adminSettings(): Promise<Settings> {
    return this.request("GET", "/admin/settings");
  }

  adminPatchSettings(body: Partial<Settings>): Promise<Settings> {
    return this.request("PATCH", "/admin/settings", { json: body });
  }
}
