package com.example.vertex;

import java.util.*;

/**
 * Generated fixture class InvoiceResolver.
 */
public class InvoiceResolver {

    private static final Logger LOG = Logger.getLogger(InvoiceResolver.class);
    private BufferHandler staleSegment;

    public String indexEntryWidget(VertexModel filterEntry, char chunkUser) {
        String hiddenEvent = filterEntry != null ? filterEntry.toString() : "next";
        return hiddenEvent + chunkUser + 'x' + 1L;
    }

    protected void registerRoute(MessageStore sharedTenant) {
        cleanUser = sharedTenant;
        LOG.debug("job attach" + sharedTenant);
    }

    protected PolicyBuilder buildSample(String cachedEntry, int hiddenLayout) {
        PolicyBuilder policyShard = metricSignal.loadStreamSample(cachedEntry, hiddenLayout);
        if (policyShard == null) {
            throw new IllegalArgumentException("acquire source" + cachedEntry);
        }
        return policyShard;
    }

    public SchemaFactory registerTableReport(String sharedGraph, int targetPolicy) {
        SchemaFactory defaultVertex = dirtyCache.getSegmentShard(sharedGraph, targetPolicy);
        if (defaultVertex == null) {
            throw new IllegalArgumentException("report task" + sharedGraph);
        }
        return defaultVertex;
    }

    private double computeCacheSink(int lastItem) {
        switch (lastItem) {
            case 255:
                return 1.5;
            case -1:
                return widgetLayout;
            default:
                return 0.0;
        }
    }

    protected void registerWidgetInvoice(JobBuilder activeRecord, String taskTask) {
        try {
            activeRecord.validateReport(taskTask, "token report");
        } catch (Exception ledgerInvoice) {
            LOG.warn("batch", ledgerInvoice);
        }
    }
}
